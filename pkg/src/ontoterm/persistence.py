"""Canonical on-disk project format and formal-context import.

One UTF-8 JSON document is the single interchange format between the CLI,
the service and the tests. Serialization is canonical (sorted keys, lists
sorted by id, LF line endings), so saving the same snapshot twice produces
byte-identical files. Loading is all-or-nothing: a file that violates any
system invariant is rejected wholesale, with a path into the document.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .core import (
    Character,
    CharacterKind,
    Concept,
    ConceptSystem,
    ModifierForm,
    Position,
    check_system,
)
from .docstore import DocStore, Document, index_document
from .errors import ContextFormatError, ProjectFormatError
from .fca import FormalContext
from .lexicon import Term, Termbase, TermStatus, VariantKind, _term_sort_key
from .textutil import tokenize

FORMAT_VERSION = 1


def _character_payload(character: Character) -> dict:
    return {
        "id": character.id,
        "kind": character.kind.value,
        "labels": dict(sorted(character.labels.items())),
        "modifier_forms": {
            lang: {"form": mf.form, "position": mf.position.value}
            for lang, mf in sorted(character.modifier_forms.items())
        },
    }


def _concept_payload(concept: Concept) -> dict:
    return {
        "id": concept.id,
        "genus": concept.genus,
        "differentia": sorted(concept.differentia),
        "denominations": dict(sorted(concept.denominations.items())),
    }


def _term_payload(term: Term) -> dict:
    return {
        "form": term.form,
        "language": term.language,
        "concept": term.concept,
        "variant_kind": term.variant_kind.value if term.variant_kind else None,
    }


def dumps_project(system: ConceptSystem, termbase: Termbase, store: DocStore) -> str:
    """Canonical serialization of a full project snapshot."""
    payload = {
        "version": FORMAT_VERSION,
        "characters": [
            _character_payload(c) for _, c in sorted(system.characters.items())
        ],
        "concepts": [_concept_payload(c) for _, c in sorted(system.concepts.items())],
        "terms": [
            _term_payload(t) for t in sorted(termbase.terms, key=_term_sort_key)
        ],
        "documents": [
            {"id": d.id, "language": d.language, "title": d.title, "body": d.body}
            for _, d in sorted(store.documents.items())
        ],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def save_project(
    system: ConceptSystem, termbase: Termbase, store: DocStore, path: str | Path
) -> None:
    Path(path).write_text(dumps_project(system, termbase, store), encoding="utf-8", newline="\n")


def _require(condition: bool, message: str, path: str):
    if not condition:
        raise ProjectFormatError(message, path)


def _parse_character(entry, path: str) -> Character:
    _require(isinstance(entry, dict), "character entry must be an object", path)
    ident = entry.get("id")
    _require(isinstance(ident, str) and bool(ident), "character id must be a non-empty string", f"{path}.id")
    kind_raw = entry.get("kind")
    try:
        kind = CharacterKind(kind_raw)
    except ValueError:
        raise ProjectFormatError(
            f"kind must be 'essential' or 'descriptive', got {kind_raw!r}", f"{path}.kind"
        ) from None
    labels = entry.get("labels")
    _require(isinstance(labels, dict), "labels must be an object", f"{path}.labels")
    for lang, text in labels.items():
        _require(
            isinstance(lang, str) and isinstance(text, str) and bool(text),
            "labels must map language codes to non-empty strings",
            f"{path}.labels.{lang}",
        )
    forms = {}
    raw_forms = entry.get("modifier_forms", {})
    _require(isinstance(raw_forms, dict), "modifier_forms must be an object", f"{path}.modifier_forms")
    for lang, raw in raw_forms.items():
        form_path = f"{path}.modifier_forms.{lang}"
        _require(isinstance(raw, dict), "modifier form must be an object", form_path)
        text = raw.get("form")
        _require(
            isinstance(text, str) and bool(text.strip()),
            "modifier form must be a non-empty string",
            f"{form_path}.form",
        )
        try:
            position = Position(raw.get("position"))
        except ValueError:
            raise ProjectFormatError(
                "position must be 'after_head' or 'before_head'", f"{form_path}.position"
            ) from None
        forms[lang] = ModifierForm(form=text, position=position)
    return Character(id=ident, kind=kind, labels=dict(labels), modifier_forms=forms)


def _parse_concept_entry(entry, path: str) -> tuple[str, str | None, frozenset[str], dict]:
    _require(isinstance(entry, dict), "concept entry must be an object", path)
    ident = entry.get("id")
    _require(isinstance(ident, str) and bool(ident), "concept id must be a non-empty string", f"{path}.id")
    genus = entry.get("genus")
    _require(
        genus is None or isinstance(genus, str),
        "genus must be a concept id or null",
        f"{path}.genus",
    )
    differentia = entry.get("differentia")
    _require(
        isinstance(differentia, list) and all(isinstance(c, str) for c in differentia),
        "differentia must be a list of character ids",
        f"{path}.differentia",
    )
    denominations = entry.get("denominations", {})
    _require(isinstance(denominations, dict), "denominations must be an object", f"{path}.denominations")
    for lang, text in denominations.items():
        _require(
            isinstance(lang, str) and isinstance(text, str) and bool(text),
            "denominations must map language codes to non-empty strings",
            f"{path}.denominations.{lang}",
        )
    return ident, genus, frozenset(differentia), dict(denominations)


def _compute_intents(
    raw: dict[str, tuple[str | None, frozenset[str]]]
) -> dict[str, frozenset[str]]:
    """Rebuild intents from genus links; rejects cycles up front."""
    intents: dict[str, frozenset[str]] = {}

    def intent_of(concept_id: str, trail: tuple[str, ...]) -> frozenset[str]:
        if concept_id in intents:
            return intents[concept_id]
        if concept_id in trail:
            raise ProjectFormatError(
                "genus-cycle: genus links form a cycle through "
                + " -> ".join(trail + (concept_id,)),
                "concepts",
            )
        genus, differentia = raw[concept_id]
        if genus is None or genus not in raw:
            intent = differentia  # unknown genus reported by check_system
        else:
            intent = intent_of(genus, trail + (concept_id,)) | differentia
        intents[concept_id] = intent
        return intent

    for concept_id in raw:
        intent_of(concept_id, ())
    return intents


def loads_project(text: str) -> tuple[ConceptSystem, Termbase, DocStore]:
    """Parse and validate a project document; all-or-nothing."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProjectFormatError(f"not valid JSON: {exc}") from None
    _require(isinstance(payload, dict), "top level must be an object", "$")
    version = payload.get("version")
    if version != FORMAT_VERSION:
        raise ProjectFormatError(
            f"unsupported project format version {version!r} (expected {FORMAT_VERSION})",
            "version",
        )

    characters: dict[str, Character] = {}
    raw_characters = payload.get("characters", [])
    _require(isinstance(raw_characters, list), "characters must be a list", "characters")
    for i, entry in enumerate(raw_characters):
        character = _parse_character(entry, f"characters[{i}]")
        _require(
            character.id not in characters,
            f"duplicate character id {character.id!r}",
            f"characters[{i}].id",
        )
        characters[character.id] = character

    raw_concepts = payload.get("concepts", [])
    _require(isinstance(raw_concepts, list), "concepts must be a list", "concepts")
    raw: dict[str, tuple[str | None, frozenset[str]]] = {}
    denominations: dict[str, dict] = {}
    for i, entry in enumerate(raw_concepts):
        ident, genus, differentia, denoms = _parse_concept_entry(entry, f"concepts[{i}]")
        _require(ident not in raw, f"duplicate concept id {ident!r}", f"concepts[{i}].id")
        raw[ident] = (genus, differentia)
        denominations[ident] = denoms

    intents = _compute_intents(raw)
    concepts = {
        ident: Concept(
            id=ident,
            intent=intents[ident],
            genus=genus,
            differentia=differentia,
            denominations=denominations[ident],
        )
        for ident, (genus, differentia) in raw.items()
    }
    system = ConceptSystem(characters=characters, concepts=concepts)
    violations = check_system(system)
    if violations:
        raise ProjectFormatError(
            "system invariants violated: "
            + "; ".join(f"{v.rule}({v.subject}): {v.message}" for v in violations),
            "$",
        )

    raw_terms = payload.get("terms", [])
    _require(isinstance(raw_terms, list), "terms must be a list", "terms")
    terms: list[Term] = []
    seen_triples = set()
    for i, entry in enumerate(raw_terms):
        path = f"terms[{i}]"
        _require(isinstance(entry, dict), "term entry must be an object", path)
        form = entry.get("form")
        language = entry.get("language")
        concept = entry.get("concept")
        _require(isinstance(form, str) and bool(form), "form must be a non-empty string", f"{path}.form")
        _require(isinstance(language, str) and bool(language), "language must be a non-empty string", f"{path}.language")
        _require(
            isinstance(concept, str) and concept in concepts,
            f"term references unknown concept {concept!r}",
            f"{path}.concept",
        )
        raw_kind = entry.get("variant_kind")
        kind = None
        if raw_kind is not None:
            try:
                kind = VariantKind(raw_kind)
            except ValueError:
                raise ProjectFormatError(
                    f"variant_kind must be one of ellipsis/synonym/other, got {raw_kind!r}",
                    f"{path}.variant_kind",
                ) from None
        triple = (language, tokenize(form), concept)
        _require(triple not in seen_triples, "duplicate term triple", path)
        seen_triples.add(triple)
        terms.append(
            Term(form=form, language=language, status=TermStatus.USAGE, concept=concept, variant_kind=kind)
        )
    termbase = Termbase(terms=tuple(sorted(terms, key=_term_sort_key)))

    raw_documents = payload.get("documents", [])
    _require(isinstance(raw_documents, list), "documents must be a list", "documents")
    documents: list[Document] = []
    seen_docs = set()
    for i, entry in enumerate(raw_documents):
        path = f"documents[{i}]"
        _require(isinstance(entry, dict), "document entry must be an object", path)
        for key in ("id", "language", "title", "body"):
            _require(isinstance(entry.get(key), str), f"document {key} must be a string", f"{path}.{key}")
        _require(entry["id"] not in seen_docs, f"duplicate document id {entry['id']!r}", f"{path}.id")
        seen_docs.add(entry["id"])
        documents.append(
            Document(id=entry["id"], language=entry["language"], title=entry["title"], body=entry["body"])
        )

    store = DocStore()
    for doc in sorted(documents, key=lambda d: d.id):
        store, _ = index_document(store, termbase, system, doc)
    return system, termbase, store


def load_project(path: str | Path) -> tuple[ConceptSystem, Termbase, DocStore]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ProjectFormatError(f"cannot read project file: {exc}") from None
    return loads_project(text)


def import_context(
    path: str | Path, system: ConceptSystem, delimiter: str = ","
) -> FormalContext:
    """Read a delimiter-separated incidence table into a formal context.

    First row: corner cell then character ids (must exist in the system);
    first column: object ids; cells are 0 or 1.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ContextFormatError(f"cannot read context table: {exc}") from None
    rows = [row for row in csv.reader(text.splitlines(), delimiter=delimiter) if row]
    if not rows:
        raise ContextFormatError("context table is empty")
    header = [cell.strip() for cell in rows[0]]
    attributes = header[1:]
    for attr in attributes:
        if attr not in system.characters:
            raise ContextFormatError(f"header references unregistered character {attr!r}")
    if len(set(attributes)) != len(attributes):
        raise ContextFormatError("duplicate character id in header")
    objects: list[str] = []
    incidence: list[tuple[bool, ...]] = []
    for line_no, row in enumerate(rows[1:], start=2):
        cells = [cell.strip() for cell in row]
        if len(cells) != len(header):
            raise ContextFormatError(
                f"line {line_no}: expected {len(header)} cells, got {len(cells)} (ragged row)"
            )
        obj = cells[0]
        if not obj:
            raise ContextFormatError(f"line {line_no}: empty object id")
        if obj in objects:
            raise ContextFormatError(f"line {line_no}: duplicate object id {obj!r}")
        objects.append(obj)
        values = []
        for attr, cell in zip(attributes, cells[1:]):
            if cell not in ("0", "1"):
                raise ContextFormatError(
                    f"line {line_no}: cell for {attr!r} must be 0 or 1, got {cell!r}"
                )
            values.append(cell == "1")
        incidence.append(tuple(values))
    return FormalContext(
        objects=tuple(objects), attributes=tuple(attributes), incidence=tuple(incidence)
    )
