"""Concept-indexed document store and multilingual search.

Documents are indexed on concepts, not keywords: a greedy longest-match
scan over the text resolves known surfaces through the lexicon, so a query
in one language retrieves documents in every language. Query expansion
extends the matched concepts to everything they subsume.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from .core import ConceptSystem, descendants
from .errors import DuplicateIdError, UnknownIdError
from .lexicon import Resolution, Termbase, match_index
from .textutil import tokenize


@dataclass(frozen=True)
class Document:
    """Ingested text; the language is declared, never detected."""

    id: str
    language: str
    title: str
    body: str


@dataclass(frozen=True)
class Posting:
    """Occurrence count of one concept in one document (count >= 1)."""

    concept: str
    doc: str
    count: int


@dataclass(frozen=True)
class AmbiguousMatch:
    """A text span that matched several concepts; reported, never indexed."""

    doc: str
    form: str
    language: str
    provenance: str
    candidates: tuple[str, ...]


@dataclass(frozen=True)
class SearchHit:
    doc: str
    language: str
    score: int


@dataclass(frozen=True)
class SearchResult:
    """Concept-based search outcome; hits are ordered by score then doc id."""

    matched_concepts: tuple[str, ...]
    expanded_concepts: tuple[str, ...]
    hits: tuple[SearchHit, ...]


@dataclass(frozen=True)
class DocStore:
    """Immutable index snapshot: documents, postings, ambiguity report.

    Indexing builds a successor snapshot; searches run against whichever
    snapshot they were handed (single writer, arbitrary readers).
    """

    documents: Mapping[str, Document] = field(default_factory=dict)
    postings: Mapping[str, Mapping[str, int]] = field(default_factory=dict)
    ambiguities: tuple[AmbiguousMatch, ...] = ()
    version: int = field(default=0, compare=False)


def _scan(
    token_fields: Iterable[tuple[str, ...]],
    table: Mapping[tuple[str, ...], Resolution],
) -> tuple[Counter, list[tuple[str, Resolution]]]:
    """Greedy longest-match scan; returns concept counts and ambiguous spans.

    Matches never overlap and never span field boundaries (title/body are
    scanned separately).
    """
    max_len = max((len(key) for key in table), default=0)
    counts: Counter = Counter()
    ambiguous: list[tuple[str, Resolution]] = []
    for tokens in token_fields:
        i = 0
        while i < len(tokens):
            matched = None
            for n in range(min(max_len, len(tokens) - i), 0, -1):
                resolution = table.get(tokens[i : i + n])
                if resolution is not None:
                    matched = (n, tokens[i : i + n], resolution)
                    break
            if matched is None:
                i += 1
                continue
            n, span, resolution = matched
            if len(resolution.concepts) == 1:
                counts[resolution.concepts[0]] += 1
            else:
                ambiguous.append((" ".join(span), resolution))
            i += n
    return counts, ambiguous


def index_document(
    store: DocStore, termbase: Termbase, system: ConceptSystem, doc: Document
) -> tuple[DocStore, list[Posting]]:
    """Index one document and return ``(successor store, its postings)``.

    Every unambiguous match increments the concept's posting; ambiguous
    matches go to the store's ambiguity report instead of the index.
    Documents are immutable once indexed: re-adding an id is an error.
    """
    if doc.id in store.documents:
        raise DuplicateIdError(f"document id already indexed: {doc.id!r}")
    table = match_index(termbase, system, doc.language)
    counts, ambiguous = _scan((tokenize(doc.title), tokenize(doc.body)), table)
    created = [
        Posting(concept=concept, doc=doc.id, count=count)
        for concept, count in sorted(counts.items())
    ]
    postings = {key: dict(value) for key, value in store.postings.items()}
    for posting in created:
        postings.setdefault(posting.concept, {})[posting.doc] = posting.count
    reports = store.ambiguities + tuple(
        AmbiguousMatch(
            doc=doc.id,
            form=form,
            language=doc.language,
            provenance=resolution.provenance,
            candidates=resolution.concepts,
        )
        for form, resolution in ambiguous
    )
    successor = replace(
        store,
        documents={**store.documents, doc.id: doc},
        postings=postings,
        ambiguities=tuple(sorted(reports, key=lambda a: (a.doc, a.form, a.candidates))),
        version=store.version + 1,
    )
    return successor, created


def remove_document(store: DocStore, doc_id: str) -> DocStore:
    """Drop a document and all its postings (updates are delete + re-add)."""
    if doc_id not in store.documents:
        raise UnknownIdError("document", doc_id)
    documents = {key: doc for key, doc in store.documents.items() if key != doc_id}
    postings = {}
    for concept, per_doc in store.postings.items():
        kept = {doc: count for doc, count in per_doc.items() if doc != doc_id}
        if kept:
            postings[concept] = kept
    ambiguities = tuple(a for a in store.ambiguities if a.doc != doc_id)
    return replace(
        store,
        documents=documents,
        postings=postings,
        ambiguities=ambiguities,
        version=store.version + 1,
    )


def expand_query(system: ConceptSystem, concepts: Iterable[str]) -> list[str]:
    """Union of the subsumed concepts of every input concept, sorted."""
    expanded: set[str] = set()
    for concept_id in concepts:
        expanded.update(descendants(system, concept_id))
    return sorted(expanded)


def search(
    store: DocStore,
    termbase: Termbase,
    system: ConceptSystem,
    query: str,
    language: str,
    expand: bool = True,
) -> SearchResult:
    """Concept-based search over all documents, whatever their language.

    The query goes through the same matching pipeline as indexing (usage
    terms and elliptical variants included); ambiguous query matches
    contribute all their candidates, since the matched concepts are part of
    the visible result. A hit's score is the sum of its posting counts over
    the expanded concepts.
    """
    table = match_index(termbase, system, language)
    counts, ambiguous = _scan((tokenize(query),), table)
    matched = set(counts)
    for _, resolution in ambiguous:
        matched.update(resolution.concepts)
    expanded = expand_query(system, matched) if expand else sorted(matched)
    scores: Counter = Counter()
    for concept_id in expanded:
        for doc_id, count in store.postings.get(concept_id, {}).items():
            scores[doc_id] += count
    hits = tuple(
        SearchHit(doc=doc_id, language=store.documents[doc_id].language, score=score)
        for doc_id, score in sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    )
    return SearchResult(
        matched_concepts=tuple(sorted(matched)),
        expanded_concepts=tuple(expanded),
        hits=hits,
    )
