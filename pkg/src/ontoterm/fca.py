"""Formal contexts and concept-lattice construction.

Objects are described by the characters they carry; abstraction is the
factorization of shared characters. The two derivation operators form a
Galois connection, and the closed (extent, intent) pairs form a complete
lattice ordered by intent inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DefinitionError, UnknownIdError


@dataclass(frozen=True)
class FormalContext:
    """Object x character incidence table with fixed row/column order."""

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    incidence: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if len(set(self.objects)) != len(self.objects):
            raise DefinitionError("object ids must be unique")
        if len(set(self.attributes)) != len(self.attributes):
            raise DefinitionError("attribute ids must be unique")
        if len(self.incidence) != len(self.objects):
            raise DefinitionError("incidence must have one row per object")
        for row in self.incidence:
            if len(row) != len(self.attributes):
                raise DefinitionError("incidence rows must match the attribute count")

    @classmethod
    def from_rows(
        cls,
        objects: Iterable[str],
        attributes: Iterable[str],
        rows: Iterable[Iterable[int | bool]],
    ) -> "FormalContext":
        return cls(
            objects=tuple(objects),
            attributes=tuple(attributes),
            incidence=tuple(tuple(bool(cell) for cell in row) for row in rows),
        )


@dataclass(frozen=True)
class FormalConcept:
    """A closed (extent, intent) pair of a formal context."""

    extent: frozenset[str]
    intent: frozenset[str]


def _attr_indexes(context: FormalContext, attrs: Iterable[str]) -> list[int]:
    lookup = {a: i for i, a in enumerate(context.attributes)}
    indexes = []
    for attr in attrs:
        if attr not in lookup:
            raise UnknownIdError("attribute", attr)
        indexes.append(lookup[attr])
    return indexes


def _object_indexes(context: FormalContext, objs: Iterable[str]) -> list[int]:
    lookup = {o: i for i, o in enumerate(context.objects)}
    indexes = []
    for obj in objs:
        if obj not in lookup:
            raise UnknownIdError("object", obj)
        indexes.append(lookup[obj])
    return indexes


def _row_masks(context: FormalContext) -> list[int]:
    """Per-object bitmask over attribute indexes."""
    masks = []
    for row in context.incidence:
        mask = 0
        for i, cell in enumerate(row):
            if cell:
                mask |= 1 << i
        masks.append(mask)
    return masks


def _mask_to_attrs(context: FormalContext, mask: int) -> frozenset[str]:
    return frozenset(
        attr for i, attr in enumerate(context.attributes) if mask & (1 << i)
    )


def derive_extent(context: FormalContext, attrs: Iterable[str]) -> frozenset[str]:
    """Objects incident to every attribute in ``attrs`` (all objects for the
    empty conjunction)."""
    indexes = _attr_indexes(context, attrs)
    mask = 0
    for i in indexes:
        mask |= 1 << i
    rows = _row_masks(context)
    return frozenset(
        obj for obj, row in zip(context.objects, rows) if row & mask == mask
    )


def derive_intent(context: FormalContext, objs: Iterable[str]) -> frozenset[str]:
    """Attributes shared by every object in ``objs`` (all attributes for the
    empty set)."""
    indexes = set(_object_indexes(context, objs))
    rows = _row_masks(context)
    full = (1 << len(context.attributes)) - 1
    mask = full
    for i in indexes:
        mask &= rows[i]
    return _mask_to_attrs(context, mask)


def _closure_fn(context: FormalContext):
    """Attribute-set closure A -> A'' as a bitmask function."""
    rows = _row_masks(context)
    full = (1 << len(context.attributes)) - 1

    def close(mask: int) -> tuple[int, tuple[int, ...]]:
        extent = tuple(i for i, row in enumerate(rows) if row & mask == mask)
        intent = full
        for i in extent:
            intent &= rows[i]
        return intent, extent

    return close


def build_lattice(context: FormalContext) -> list[FormalConcept]:
    """All formal concepts of the context, in canonical order.

    Enumerates closed intents in lectic order over the context's attribute
    order (NextClosure) and returns them sorted by intent under that fixed
    order, so repeated runs produce identical output.
    """
    n = len(context.attributes)
    close = _closure_fn(context)
    concepts: list[tuple[int, tuple[int, ...]]] = []

    intent, extent = close(0)
    concepts.append((intent, extent))
    current = intent
    while True:
        nxt = None
        for i in reversed(range(n)):
            bit = 1 << i
            if current & bit:
                continue
            lower = bit - 1
            candidate = (current & lower) | bit
            closed, closed_extent = close(candidate)
            if closed & lower == current & lower:
                nxt = (closed, closed_extent)
                break
        if nxt is None:
            break
        concepts.append(nxt)
        current = nxt[0]

    def intent_key(item: tuple[int, tuple[int, ...]]) -> tuple[int, ...]:
        mask = item[0]
        return tuple(i for i in range(n) if mask & (1 << i))

    concepts.sort(key=intent_key)
    return [
        FormalConcept(
            extent=frozenset(context.objects[i] for i in extent),
            intent=_mask_to_attrs(context, intent),
        )
        for intent, extent in concepts
    ]
