"""Derivation operators and lattice construction against naive oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_lattice
from strategies import contexts
from ontoterm.errors import DefinitionError, UnknownIdError
from ontoterm.fca import FormalContext, build_lattice, derive_extent, derive_intent

# Hand-checked 3x3 fixture:
#        a1 a2 a3
#   o1    1  1  0
#   o2    1  0  1
#   o3    0  1  1
FIXTURE = FormalContext.from_rows(
    ["o1", "o2", "o3"], ["a1", "a2", "a3"], [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
)


def test_derive_extent_of_empty_set_is_all_objects():
    assert derive_extent(FIXTURE, set()) == frozenset({"o1", "o2", "o3"})


def test_derive_intent_of_empty_set_is_all_attributes():
    assert derive_intent(FIXTURE, set()) == frozenset({"a1", "a2", "a3"})


def test_derivations_on_fixture_match_hand_scan():
    assert derive_extent(FIXTURE, {"a1"}) == frozenset({"o1", "o2"})
    assert derive_extent(FIXTURE, {"a1", "a2"}) == frozenset({"o1"})
    assert derive_extent(FIXTURE, {"a2", "a3"}) == frozenset({"o3"})
    assert derive_intent(FIXTURE, {"o1"}) == frozenset({"a1", "a2"})
    assert derive_intent(FIXTURE, {"o1", "o2"}) == frozenset({"a1"})
    assert derive_intent(FIXTURE, {"o1", "o2", "o3"}) == frozenset()


def test_derivations_reject_unknown_ids():
    with pytest.raises(UnknownIdError):
        derive_extent(FIXTURE, {"a9"})
    with pytest.raises(UnknownIdError):
        derive_intent(FIXTURE, {"o9"})


def test_malformed_context_is_rejected():
    with pytest.raises(DefinitionError):
        FormalContext.from_rows(["o1", "o2"], ["a1"], [[1]])  # missing row
    with pytest.raises(DefinitionError):
        FormalContext.from_rows(["o1"], ["a1", "a1"], [[1, 0]])  # dup attribute
    with pytest.raises(DefinitionError):
        FormalContext.from_rows(["o1"], ["a1", "a2"], [[1]])  # ragged row


def test_lattice_of_zero_attributes_is_single_trivial_concept():
    context = FormalContext.from_rows(["o1", "o2", "o3"], [], [[], [], []])
    concepts = build_lattice(context)
    assert len(concepts) == 1
    assert concepts[0].extent == frozenset({"o1", "o2", "o3"})
    assert concepts[0].intent == frozenset()


def test_lattice_of_empty_context_is_single_trivial_concept():
    concepts = build_lattice(FormalContext.from_rows([], [], []))
    assert [(c.extent, c.intent) for c in concepts] == [(frozenset(), frozenset())]


def test_lattice_of_identity_2x2():
    context = FormalContext.from_rows(["o1", "o2"], ["a1", "a2"], [[1, 0], [0, 1]])
    got = {(c.extent, c.intent) for c in build_lattice(context)}
    assert got == {
        (frozenset({"o1", "o2"}), frozenset()),
        (frozenset({"o1"}), frozenset({"a1"})),
        (frozenset({"o2"}), frozenset({"a2"})),
        (frozenset(), frozenset({"a1", "a2"})),
    }


def test_lattice_of_3x3_fixture_has_eight_hand_enumerated_concepts():
    got = [(sorted(c.extent), sorted(c.intent)) for c in build_lattice(FIXTURE)]
    assert got == [
        (["o1", "o2", "o3"], []),
        (["o1", "o2"], ["a1"]),
        (["o1"], ["a1", "a2"]),
        ([], ["a1", "a2", "a3"]),
        (["o2"], ["a1", "a3"]),
        (["o1", "o3"], ["a2"]),
        (["o3"], ["a2", "a3"]),
        (["o2", "o3"], ["a3"]),
    ]


def test_lattice_output_is_deterministic():
    first = build_lattice(FIXTURE)
    second = build_lattice(FIXTURE)
    assert first == second


@settings(deadline=None, max_examples=200)
@given(contexts())
def test_lattice_equals_brute_force_oracle(context):
    got = {(c.extent, c.intent) for c in build_lattice(context)}
    assert got == brute_force_lattice(context)


@settings(deadline=None)
@given(contexts(), st.data())
def test_derivation_composition_is_a_closure_operator(context, data):
    attrs = list(context.attributes)
    a = frozenset(data.draw(st.sets(st.sampled_from(attrs)))) if attrs else frozenset()
    b = a | (
        frozenset(data.draw(st.sets(st.sampled_from(attrs)))) if attrs else frozenset()
    )

    def close(subset):
        return derive_intent(context, derive_extent(context, subset))

    # extensive, idempotent, monotone
    assert a <= close(a)
    assert close(close(a)) == close(a)
    assert close(a) <= close(b)
    # both derivations are antitone
    assert derive_extent(context, b) <= derive_extent(context, a)
    objs = list(context.objects)
    o_small = frozenset(data.draw(st.sets(st.sampled_from(objs)))) if objs else frozenset()
    o_big = o_small | (
        frozenset(data.draw(st.sets(st.sampled_from(objs)))) if objs else frozenset()
    )
    assert derive_intent(context, o_big) <= derive_intent(context, o_small)


@settings(deadline=None, max_examples=100)
@given(contexts(max_objects=5, max_attributes=5))
def test_lattice_is_complete_under_meet_and_join(context):
    concepts = build_lattice(context)
    extents = {c.extent for c in concepts}
    intents = {c.intent for c in concepts}
    assert len(extents) == len(concepts) == len(intents)
    for first in concepts:
        for second in concepts:
            # meet: extents are closed under intersection; join: intents are
            assert first.extent & second.extent in extents
            assert first.intent & second.intent in intents
