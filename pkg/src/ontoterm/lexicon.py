"""Usage terms, the termbase, and resolution of surface forms to concepts.

Normalized terms live on the concepts themselves (the termbase mirrors them
rather than owning them); the termbase registers usage terms: elliptical
variants, synonyms and other tropes actually found in specialized discourse.
Resolution is layered: exact normalized match, then registered usage, then
algorithmic ellipsis detection. Ambiguity is surfaced, never silently broken.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Mapping

from .core import ConceptSystem
from .naming import NamingConvention, synthesize, term_structure
from .textutil import tokenize


class TermStatus(str, Enum):
    NORMALIZED = "normalized"
    USAGE = "usage"


class VariantKind(str, Enum):
    ELLIPSIS = "ellipsis"
    SYNONYM = "synonym"
    OTHER = "other"


@dataclass(frozen=True)
class Term:
    """A surface form in one language linked to a concept."""

    form: str
    language: str
    status: TermStatus
    concept: str
    variant_kind: VariantKind | None = None


def _term_sort_key(term: Term) -> tuple:
    return (term.language, tokenize(term.form), term.concept, term.form)


@dataclass(frozen=True)
class Termbase:
    """Immutable snapshot of registered usage terms.

    Terms are kept in canonical order; mutations return a successor
    snapshot under the same single-writer contract as ``ConceptSystem``.
    """

    terms: tuple[Term, ...] = ()
    version: int = field(default=0, compare=False)

    @cached_property
    def by_form(self) -> Mapping[tuple[str, tuple[str, ...]], tuple[Term, ...]]:
        index: dict[tuple[str, tuple[str, ...]], list[Term]] = {}
        for term in self.terms:
            index.setdefault((term.language, tokenize(term.form)), []).append(term)
        return {key: tuple(values) for key, values in index.items()}

    @cached_property
    def by_concept(self) -> Mapping[str, tuple[Term, ...]]:
        index: dict[str, list[Term]] = {}
        for term in self.terms:
            index.setdefault(term.concept, []).append(term)
        return {key: tuple(values) for key, values in index.items()}


def register_usage(
    termbase: Termbase,
    system: ConceptSystem,
    form: str,
    language: str,
    concept: str,
    variant_kind: VariantKind | str | None = None,
) -> tuple[Termbase, Term]:
    """Register a usage term for a concept.

    Idempotent on the (language, case-folded form, concept) triple: a
    duplicate registration returns the snapshot unchanged.
    """
    system.concept(concept)
    kind = VariantKind(variant_kind) if variant_kind is not None else None
    key = (language, tokenize(form), concept)
    for existing in termbase.terms:
        if (existing.language, tokenize(existing.form), existing.concept) == key:
            return termbase, existing
    term = Term(
        form=form,
        language=language,
        status=TermStatus.USAGE,
        concept=concept,
        variant_kind=kind,
    )
    terms = tuple(sorted(termbase.terms + (term,), key=_term_sort_key))
    return replace(termbase, terms=terms, version=termbase.version + 1), term


def normalized_terms(system: ConceptSystem, language: str | None = None) -> list[Term]:
    """Normalized terms derived from the concepts' stored denominations."""
    result = [
        Term(
            form=denomination,
            language=lang,
            status=TermStatus.NORMALIZED,
            concept=concept.id,
        )
        for concept in system.concepts.values()
        for lang, denomination in concept.denominations.items()
        if language is None or lang == language
    ]
    result.sort(key=_term_sort_key)
    return result


def terms_for_concept(
    termbase: Termbase, system: ConceptSystem, concept_id: str
) -> list[Term]:
    """All terms (normalized first, then usage) naming one concept."""
    concept = system.concept(concept_id)
    normalized = [
        Term(form=text, language=lang, status=TermStatus.NORMALIZED, concept=concept_id)
        for lang, text in sorted(concept.denominations.items())
    ]
    usage = sorted(termbase.by_concept.get(concept_id, ()), key=_term_sort_key)
    return normalized + usage


@dataclass(frozen=True)
class Resolution:
    """Outcome of resolving a surface form: concepts plus the rule that fired."""

    concepts: tuple[str, ...]
    provenance: str  # "normalized" | "usage" | "ellipsis" | "none"
    ambiguous: bool = False

    @property
    def resolved(self) -> bool:
        return self.provenance != "none"


UNRESOLVED = Resolution(concepts=(), provenance="none", ambiguous=False)


def _ellipsis_variants(
    system: ConceptSystem, language: str, convention: NamingConvention | None = None
) -> dict[tuple[str, ...], list[tuple[int, str]]]:
    """All elliptical surface variants per token sequence.

    For every concept whose stored denomination matches its synthesized form,
    every non-empty proper subset of modifier groups (kept in original order)
    yields one variant; the value records (dropped group count, concept id).
    """
    conv = convention or NamingConvention(language)
    variants: dict[tuple[str, ...], dict[str, int]] = {}
    for concept in system.concepts.values():
        stored = concept.denominations.get(language)
        if stored is None:
            continue
        structure = term_structure(system, concept.id, language, conv)
        if structure is None:
            continue
        head, groups = structure
        if len(groups) < 2:
            continue
        full = synthesize(head, groups, separator=conv.separator)
        if tokenize(full) != tokenize(stored):
            continue  # overridden somewhere along the chain: groups unreliable
        for size in range(1, len(groups)):
            for keep in combinations(range(len(groups)), size):
                variant = tokenize(synthesize(head, groups, keep=keep, separator=conv.separator))
                dropped = len(groups) - size
                per_concept = variants.setdefault(variant, {})
                if dropped < per_concept.get(concept.id, len(groups) + 1):
                    per_concept[concept.id] = dropped
    return {
        toks: sorted((dropped, cid) for cid, dropped in per_concept.items())
        for toks, per_concept in variants.items()
    }


def ellipsis_candidates(
    system: ConceptSystem,
    form: str,
    language: str,
    convention: NamingConvention | None = None,
) -> list[str]:
    """Concepts whose normalized term yields ``form`` by dropping modifier
    groups, ranked by fewest dropped groups then concept id.

    Never contains a concept whose full normalized form equals the query
    (only proper subsets of groups are elliptical).
    """
    ranked = _ellipsis_variants(system, language, convention).get(tokenize(form), [])
    return [concept_id for _, concept_id in ranked]


def match_index(
    termbase: Termbase,
    system: ConceptSystem,
    language: str,
    convention: NamingConvention | None = None,
) -> dict[tuple[str, ...], Resolution]:
    """Token sequence -> resolution for every known surface in a language.

    Precedence per sequence: normalized denomination, then registered usage,
    then ellipsis variants. This single table backs both ``resolve`` and the
    docstore's longest-match scan, so the two can never disagree.
    """
    table: dict[tuple[str, ...], Resolution] = {}
    normalized: dict[tuple[str, ...], list[str]] = {}
    for concept in system.concepts.values():
        denomination = concept.denominations.get(language)
        if denomination is not None:
            normalized.setdefault(tokenize(denomination), []).append(concept.id)
    for toks, ids in normalized.items():
        ids = sorted(set(ids))
        table[toks] = Resolution(tuple(ids), "normalized", ambiguous=len(ids) > 1)
    for (lang, toks), terms in termbase.by_form.items():
        if lang != language or toks in table:
            continue
        ids = sorted({term.concept for term in terms})
        table[toks] = Resolution(tuple(ids), "usage", ambiguous=len(ids) > 1)
    for toks, ranked in _ellipsis_variants(system, language, convention).items():
        if toks in table:
            continue
        ids = [concept_id for _, concept_id in ranked]
        table[toks] = Resolution(tuple(ids), "ellipsis", ambiguous=len(ids) > 1)
    table.pop((), None)
    return table


def resolve(
    termbase: Termbase, system: ConceptSystem, form: str, language: str
) -> Resolution:
    """Resolve a surface form to concepts with provenance.

    Unresolved forms yield the ``"none"`` resolution rather than an error;
    multiple candidates are all returned and flagged ambiguous.
    """
    toks = tokenize(form)
    if not toks:
        return UNRESOLVED
    return match_index(termbase, system, language).get(toks, UNRESOLVED)
