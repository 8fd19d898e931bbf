"""Characters, concepts and the subsumption order of a concept system.

A ``ConceptSystem`` is a versioned immutable snapshot: every mutating
operation returns a successor snapshot (with ``version + 1``) and leaves its
input untouched, so arbitrary readers can keep using older snapshots. A
single writer is expected to thread the latest snapshot through its calls.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Mapping

from .errors import (
    DefinitionError,
    DuplicateIdError,
    DuplicateIntentError,
    UnknownIdError,
    UnsupportedOperationError,
)


class CharacterKind(str, Enum):
    """Essential characters define and differentiate; descriptive ones only
    record perceived qualities and may not carry the hierarchy backbone."""

    ESSENTIAL = "essential"
    DESCRIPTIVE = "descriptive"


class Position(str, Enum):
    """Where a modifier attaches relative to the head of the genus term."""

    AFTER_HEAD = "after_head"
    BEFORE_HEAD = "before_head"


@dataclass(frozen=True)
class ModifierForm:
    """Surface form a character contributes to derived term names."""

    form: str
    position: Position = Position.AFTER_HEAD


@dataclass(frozen=True)
class Character:
    """A typed unit of knowledge attributed to objects.

    ``labels`` maps language codes to human labels; ``modifier_forms`` maps
    language codes to the form the character contributes when it appears in
    a differentia. Kind never changes after creation.
    """

    id: str
    kind: CharacterKind
    labels: Mapping[str, str]
    modifier_forms: Mapping[str, ModifierForm] = field(default_factory=dict)


@dataclass(frozen=True)
class Concept:
    """A unit of knowledge identified by a unique combination of characters.

    ``intent`` is always ``genus.intent | differentia``; for a root concept
    (no genus) the differentia equals the intent. ``denominations`` holds the
    normalized term per language.
    """

    id: str
    intent: frozenset[str]
    genus: str | None
    differentia: frozenset[str]
    denominations: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Violation:
    """One broken invariant, identified by a stable rule name."""

    rule: str
    subject: str
    message: str

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return f"[{self.rule}] {self.subject}: {self.message}"


@dataclass(frozen=True)
class ConceptSystem:
    """Immutable snapshot of all characters and concepts.

    ``version`` is a monotonically increasing snapshot counter; it is
    excluded from equality so that round-tripped systems compare equal.
    """

    characters: Mapping[str, Character] = field(default_factory=dict)
    concepts: Mapping[str, Concept] = field(default_factory=dict)
    version: int = field(default=0, compare=False)

    def character(self, char_id: str) -> Character:
        try:
            return self.characters[char_id]
        except KeyError:
            raise UnknownIdError("character", char_id) from None

    def concept(self, concept_id: str) -> Concept:
        try:
            return self.concepts[concept_id]
        except KeyError:
            raise UnknownIdError("concept", concept_id) from None


def _slugify(text: str) -> str:
    """ASCII slug used when no explicit id is supplied."""
    decomposed = unicodedata.normalize("NFKD", text)
    ascii_text = decomposed.encode("ascii", "ignore").decode("ascii")
    slug = re.sub(r"[^a-z0-9]+", "-", ascii_text.casefold()).strip("-")
    return slug or "x"


def _normalize_modifier(value) -> ModifierForm:
    if isinstance(value, ModifierForm):
        form, position = value.form, value.position
    elif isinstance(value, str):
        form, position = value, Position.AFTER_HEAD
    else:
        form, raw = value
        position = Position(raw)
    if not form or not form.strip():
        raise DefinitionError("modifier form must be a non-empty string")
    return ModifierForm(form=form, position=Position(position))


def add_character(
    system: ConceptSystem,
    labels: Mapping[str, str],
    kind: CharacterKind | str = CharacterKind.ESSENTIAL,
    modifier_forms: Mapping[str, ModifierForm | str | tuple] | None = None,
    char_id: str | None = None,
) -> tuple[ConceptSystem, str]:
    """Register a character and return ``(successor system, character id)``.

    The id defaults to a slug of the label in the lexicographically first
    language. Every language carrying a modifier form must also carry a
    label.
    """
    labels = {lang: text for lang, text in labels.items() if text}
    if not labels:
        raise DefinitionError("a character needs a label in at least one language")
    forms = {
        lang: _normalize_modifier(value) for lang, value in (modifier_forms or {}).items()
    }
    for lang in forms:
        if lang not in labels:
            raise DefinitionError(
                f"modifier form for language {lang!r} has no matching label"
            )
    if char_id is None:
        char_id = _slugify(labels[min(labels)])
    if char_id in system.characters:
        raise DuplicateIdError(f"character id already in use: {char_id!r}")
    character = Character(id=char_id, kind=CharacterKind(kind), labels=dict(labels), modifier_forms=forms)
    successor = replace(
        system,
        characters={**system.characters, char_id: character},
        version=system.version + 1,
    )
    return successor, char_id


def define_concept(
    system: ConceptSystem,
    genus: str | None = None,
    differentia: Iterable[str] = (),
    concept_id: str | None = None,
) -> tuple[ConceptSystem, str]:
    """Define a concept by genus and differentia (specific differentiation).

    Returns ``(successor system, concept id)``. The intent is the union of
    the genus intent and the differentia; a duplicate intent is rejected to
    preserve the unique-combination invariant. Root concepts (no genus) use
    their differentia as full intent.
    """
    diff = frozenset(differentia)
    if not diff:
        raise DefinitionError("differentia must not be empty")
    for char_id in diff:
        if char_id not in system.characters:
            raise UnknownIdError("character", char_id)
    if genus is not None:
        genus_concept = system.concept(genus)
        overlap = diff & genus_concept.intent
        if overlap:
            raise DefinitionError(
                "differentia overlaps the genus intent: " + ", ".join(sorted(overlap))
            )
        intent = genus_concept.intent | diff
    else:
        intent = diff
    for existing in system.concepts.values():
        if existing.intent == intent:
            raise DuplicateIntentError(
                f"intent {{{', '.join(sorted(intent))}}} already defines "
                f"concept {existing.id!r}"
            )
    if concept_id is None:
        concept_id = "+".join(sorted(intent))
    if concept_id in system.concepts:
        raise DuplicateIdError(f"concept id already in use: {concept_id!r}")
    concept = Concept(id=concept_id, intent=intent, genus=genus, differentia=diff)
    successor = replace(
        system,
        concepts={**system.concepts, concept_id: concept},
        version=system.version + 1,
    )
    return successor, concept_id


def conjoin(
    system: ConceptSystem, a: str, b: str, concept_id: str | None = None
) -> tuple[ConceptSystem, str]:
    """Define the conjunction of two concepts as a species of ``a``.

    The new intent is the union of both intents; ``a`` becomes the genus and
    the characters specific to ``b`` the differentia.
    """
    concept_a = system.concept(a)
    concept_b = system.concept(b)
    diff = concept_b.intent - concept_a.intent
    if not diff:
        raise DefinitionError(f"{b!r} adds no character to {a!r}; conjunction is {a!r} itself")
    return define_concept(system, genus=a, differentia=diff, concept_id=concept_id)


def disjoin(system: ConceptSystem, a: str, b: str) -> tuple[ConceptSystem, str]:
    """Disjunction has no intensional definition; always rejected."""
    system.concept(a)
    system.concept(b)
    raise UnsupportedOperationError(
        "disjunction of concepts has no defined intensional semantics"
    )


def set_denomination(
    system: ConceptSystem, concept_id: str, language: str, term: str
) -> ConceptSystem:
    """Store a normalized denomination for one language on a concept."""
    concept = system.concept(concept_id)
    if not term or not term.strip():
        raise DefinitionError("denomination must be a non-empty string")
    updated = replace(
        concept, denominations={**concept.denominations, language: term}
    )
    return replace(
        system,
        concepts={**system.concepts, concept_id: updated},
        version=system.version + 1,
    )


def subsumes(system: ConceptSystem, a: str, b: str) -> bool:
    """True iff ``a`` subsumes ``b``: intent(a) is a subset of intent(b)."""
    return system.concept(a).intent <= system.concept(b).intent


def descendants(system: ConceptSystem, concept_id: str) -> list[str]:
    """All concepts subsumed by ``concept_id`` (itself included), sorted."""
    intent = system.concept(concept_id).intent
    return sorted(c.id for c in system.concepts.values() if intent <= c.intent)


def children(system: ConceptSystem, concept_id: str) -> list[str]:
    """Direct species of a concept (its genus children), sorted."""
    system.concept(concept_id)
    return sorted(c.id for c in system.concepts.values() if c.genus == concept_id)


def roots(system: ConceptSystem) -> list[str]:
    """Concepts without a genus, sorted. Multiple roots are permitted."""
    return sorted(c.id for c in system.concepts.values() if c.genus is None)


def genus_chain(system: ConceptSystem, concept_id: str) -> list[str]:
    """Genus path from the root ancestor down to ``concept_id``."""
    path = [concept_id]
    seen = {concept_id}
    current = system.concept(concept_id)
    while current.genus is not None:
        if current.genus in seen:
            raise DefinitionError(f"genus cycle through {current.genus!r}")
        path.append(current.genus)
        seen.add(current.genus)
        current = system.concept(current.genus)
    path.reverse()
    return path


def check_rigidity(system: ConceptSystem) -> list[Violation]:
    """Concepts differentiated by descriptive characters are not rigid.

    Returns one violation per offending concept; an empty list means the
    notional backbone is rigid.
    """
    violations = []
    for concept in sorted(system.concepts.values(), key=lambda c: c.id):
        descriptive = sorted(
            char_id
            for char_id in concept.differentia
            if char_id in system.characters
            and system.characters[char_id].kind is CharacterKind.DESCRIPTIVE
        )
        if descriptive:
            violations.append(
                Violation(
                    rule="non-rigid-differentia",
                    subject=concept.id,
                    message=(
                        "differentia uses descriptive character(s): "
                        + ", ".join(descriptive)
                    ),
                )
            )
    return violations


def _cycle_members(system: ConceptSystem) -> set[str]:
    """Concept ids lying on a genus cycle."""
    members: set[str] = set()
    state: dict[str, int] = {}  # 0 in progress, 1 done
    for start in system.concepts:
        path = []
        node: str | None = start
        while node is not None and node in system.concepts and node not in state:
            state[node] = 0
            path.append(node)
            node = system.concepts[node].genus
        if node is not None and state.get(node) == 0:
            # walked back into the current path: everything from `node` on is a cycle
            members.update(path[path.index(node):])
        for visited in path:
            state[visited] = 1
    return members


def check_system(system: ConceptSystem) -> list[Violation]:
    """Aggregate invariant check; loading a file that fails this is rejected."""
    violations: list[Violation] = []

    for char_id, character in system.characters.items():
        if character.id != char_id:
            violations.append(
                Violation("id-mismatch", char_id, f"character keyed {char_id!r} has id {character.id!r}")
            )
        if not character.labels:
            violations.append(
                Violation("empty-labels", char_id, "character has no label in any language")
            )
        for lang in character.modifier_forms:
            if lang not in character.labels:
                violations.append(
                    Violation(
                        "modifier-without-label",
                        char_id,
                        f"modifier form for {lang!r} has no matching label",
                    )
                )

    for cycle_id in sorted(_cycle_members(system)):
        violations.append(
            Violation("genus-cycle", cycle_id, "genus links form a cycle")
        )

    by_intent: dict[frozenset[str], list[str]] = {}
    for concept_id, concept in system.concepts.items():
        if concept.id != concept_id:
            violations.append(
                Violation("id-mismatch", concept_id, f"concept keyed {concept_id!r} has id {concept.id!r}")
            )
        by_intent.setdefault(concept.intent, []).append(concept_id)
        for char_id in sorted(concept.intent | concept.differentia):
            if char_id not in system.characters:
                violations.append(
                    Violation("unknown-character", concept_id, f"references unknown character {char_id!r}")
                )
        if not concept.differentia:
            violations.append(
                Violation("empty-differentia", concept_id, "differentia is empty")
            )
        if concept.genus is None:
            if concept.differentia != concept.intent:
                violations.append(
                    Violation(
                        "intent-composition",
                        concept_id,
                        "root concept intent must equal its differentia",
                    )
                )
        elif concept.genus not in system.concepts:
            violations.append(
                Violation("unknown-genus", concept_id, f"genus {concept.genus!r} does not exist")
            )
        else:
            genus = system.concepts[concept.genus]
            if concept.differentia & genus.intent:
                violations.append(
                    Violation(
                        "intent-composition",
                        concept_id,
                        "differentia overlaps the genus intent",
                    )
                )
            if concept.intent != genus.intent | concept.differentia:
                violations.append(
                    Violation(
                        "intent-composition",
                        concept_id,
                        "intent differs from genus intent plus differentia",
                    )
                )

    for intent, ids in by_intent.items():
        if len(ids) > 1:
            violations.append(
                Violation(
                    "duplicate-intent",
                    min(ids),
                    "concepts share one intent: " + ", ".join(sorted(ids)),
                )
            )

    violations.sort(key=lambda v: (v.rule, v.subject, v.message))
    return violations
