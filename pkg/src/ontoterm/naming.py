"""Motivated normalized denominations: synthesis, parsing, and lint.

A species name is built from its genus name (head) and the modifier forms
of its differentia, so the term's shape reflects the concept's place in the
system. Synthesis walks the genus chain; each differentiation step
contributes one modifier group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    ConceptSystem,
    ModifierForm,
    Position,
    Violation,
    genus_chain,
    set_denomination,
)
from .errors import DefinitionError, NamingError
from .textutil import tokenize


@dataclass(frozen=True)
class NamingConvention:
    """Per-language synthesis settings.

    ``default_position`` is the fallback used when registering characters
    without an explicit modifier position; ``separator`` joins the head and
    the modifier forms.
    """

    language: str
    default_position: Position = Position.AFTER_HEAD
    separator: str = " "

    def __post_init__(self):
        if not self.separator:
            raise DefinitionError("separator must be non-empty")


def _apply_group(base: str, group: Sequence[ModifierForm], separator: str) -> str:
    """Attach one modifier group to a head term.

    Within a group, before-head forms are prepended as a block and
    after-head forms appended as a block, both in canonical character order.
    """
    before = [m.form for m in group if m.position is Position.BEFORE_HEAD]
    after = [m.form for m in group if m.position is Position.AFTER_HEAD]
    return separator.join(before + [base] + after)


def synthesize(
    head: str,
    groups: Sequence[Sequence[ModifierForm]],
    keep: Sequence[int] | None = None,
    separator: str = " ",
) -> str:
    """Compose a term from a head and ordered modifier groups.

    ``keep`` selects which groups participate (all by default); dropped
    groups model elliptical usage variants.
    """
    kept = set(range(len(groups))) if keep is None else set(keep)
    term = head
    for index, group in enumerate(groups):
        if index in kept:
            term = _apply_group(term, group, separator)
    return term


def term_structure(
    system: ConceptSystem,
    concept_id: str,
    language: str,
    convention: NamingConvention | None = None,
) -> tuple[str, list[list[ModifierForm]]] | None:
    """Head and modifier groups of a concept's name in one language.

    One group per differentiation step on the genus chain, each holding the
    step's modifier forms in canonical character-id order. Returns ``None``
    when the root has no denomination or any chain character lacks a
    modifier form for the language.
    """
    chain = genus_chain(system, concept_id)
    root = system.concepts[chain[0]]
    head = root.denominations.get(language)
    if head is None:
        return None
    groups: list[list[ModifierForm]] = []
    for node_id in chain[1:]:
        node = system.concepts[node_id]
        group = []
        for char_id in sorted(node.differentia):
            form = system.characters[char_id].modifier_forms.get(language)
            if form is None:
                return None
            group.append(form)
        groups.append(group)
    return head, groups


def denominate(
    system: ConceptSystem,
    concept_id: str,
    language: str,
    convention: NamingConvention | None = None,
) -> tuple[ConceptSystem, str]:
    """Synthesize and store the normalized term of a concept.

    The genus denomination is the head: stored ancestor denominations take
    precedence over re-synthesis, so a deliberate override propagates to its
    species. Returns ``(successor system, term)``; the system is unchanged
    when the stored term is already current.
    """
    conv = convention or NamingConvention(language)
    chain = genus_chain(system, concept_id)
    nodes = [system.concepts[i] for i in chain]
    head = nodes[0].denominations.get(language)
    if head is None:
        raise NamingError(
            f"root concept {nodes[0].id!r} has no denomination for language {language!r}"
        )
    term = head
    for node in nodes[1:]:
        group = []
        for char_id in sorted(node.differentia):
            form = system.characters[char_id].modifier_forms.get(language)
            if form is None:
                raise NamingError(
                    f"character {char_id!r} has no modifier form for language {language!r}"
                )
            group.append(form)
        term = _apply_group(term, group, conv.separator)
        if node.id != concept_id and language in node.denominations:
            term = node.denominations[language]
    if system.concepts[concept_id].denominations.get(language) == term:
        return system, term
    return set_denomination(system, concept_id, language, term), term


def generate_denominations(
    system: ConceptSystem,
    language: str,
    convention: NamingConvention | None = None,
) -> ConceptSystem:
    """Denominate every concept in one language, genus before species.

    Raises ``NamingError`` when a root lacks its denomination, a chain
    character lacks a modifier form, or the pass produces two equal terms
    (generated denominations must be pairwise distinct).
    """
    order = sorted(system.concepts.values(), key=lambda c: (len(c.intent), c.id))
    for concept in order:
        system, _ = denominate(system, concept.id, language, convention)
    seen: dict[tuple[str, ...], str] = {}
    for concept in sorted(system.concepts.values(), key=lambda c: c.id):
        key = tokenize(concept.denominations[language])
        if key in seen:
            raise NamingError(
                f"generated denomination collision in {language!r}: "
                f"{seen[key]!r} and {concept.id!r} both named "
                f"{concept.denominations[language]!r}"
            )
        seen[key] = concept.id
    return system


def parse_denomination(system: ConceptSystem, term: str, language: str) -> str:
    """Resolve a normalized term back to its concept (token-level, case-folded)."""
    target = tokenize(term)
    matches = sorted(
        concept.id
        for concept in system.concepts.values()
        if language in concept.denominations
        and tokenize(concept.denominations[language]) == target
    )
    if not matches:
        raise NamingError(f"no normalized term {term!r} in language {language!r}")
    if len(matches) > 1:
        raise NamingError(
            f"denomination {term!r} ({language}) is shared by concepts: "
            + ", ".join(matches)
        )
    return matches[0]


def _contains_block(haystack: tuple[str, ...], needle: tuple[str, ...]) -> bool:
    if not needle:
        return True
    return any(
        haystack[i : i + len(needle)] == needle
        for i in range(len(haystack) - len(needle) + 1)
    )


def motivation_report(
    system: ConceptSystem, language: str | None = None
) -> list[Violation]:
    """Report unmotivated and duplicated denominations.

    A stored name is unmotivated when it does not contain its genus's name
    as a contiguous token block; two concepts must never share one name in
    one language.
    """
    if language is None:
        languages = sorted(
            {lang for c in system.concepts.values() for lang in c.denominations}
        )
    else:
        languages = [language]
    findings: list[Violation] = []
    for lang in languages:
        named = {
            c.id: tokenize(c.denominations[lang])
            for c in system.concepts.values()
            if lang in c.denominations
        }
        by_tokens: dict[tuple[str, ...], list[str]] = {}
        for concept_id, toks in named.items():
            by_tokens.setdefault(toks, []).append(concept_id)
        for toks, ids in sorted(by_tokens.items()):
            ids = sorted(ids)
            for i in range(len(ids)):
                for j in range(i + 1, len(ids)):
                    findings.append(
                        Violation(
                            rule="duplicate-denomination",
                            subject=ids[i],
                            message=(
                                f"concepts {ids[i]!r} and {ids[j]!r} share the "
                                f"{lang} denomination {' '.join(toks)!r}"
                            ),
                        )
                    )
        for concept_id in sorted(named):
            concept = system.concepts[concept_id]
            if concept.genus is None or concept.genus not in named:
                continue
            if not _contains_block(named[concept_id], named[concept.genus]):
                findings.append(
                    Violation(
                        rule="unmotivated-denomination",
                        subject=concept_id,
                        message=(
                            f"{lang} denomination "
                            f"{concept.denominations[lang]!r} does not contain "
                            f"the genus denomination "
                            f"{system.concepts[concept.genus].denominations[lang]!r}"
                        ),
                    )
                )
    findings.sort(key=lambda v: (v.rule, v.subject, v.message))
    return findings
