"""Usage terms, ellipsis detection, and resolution precedence."""

import pytest
from hypothesis import given, settings

from conftest import RELAIS, RELAIS_SEUIL, RELAIS_SEUIL_TENSION, build_relay_system
from strategies import concept_systems
from ontoterm import (
    ConceptSystem,
    Termbase,
    add_character,
    define_concept,
    ellipsis_candidates,
    generate_denominations,
    register_usage,
    resolve,
    set_denomination,
    terms_for_concept,
)
from ontoterm.errors import UnknownIdError
from ontoterm.lexicon import TermStatus
from ontoterm.naming import synthesize, term_structure


def test_register_usage_stores_term(relay_system):
    termbase = Termbase()
    termbase, term = register_usage(
        termbase, relay_system, "relais de tension", "fr", RELAIS_SEUIL_TENSION, "ellipsis"
    )
    assert term.status is TermStatus.USAGE
    assert term.variant_kind.value == "ellipsis"
    assert termbase.terms == (term,)


def test_register_usage_is_idempotent(relay_system):
    termbase = Termbase()
    termbase, _ = register_usage(
        termbase, relay_system, "relais de tension", "fr", RELAIS_SEUIL_TENSION, "ellipsis"
    )
    again, _ = register_usage(
        termbase, relay_system, "relais de tension", "fr", RELAIS_SEUIL_TENSION, "ellipsis"
    )
    assert again is termbase
    assert len(again.terms) == 1


def test_register_usage_rejects_unknown_concept(relay_system):
    with pytest.raises(UnknownIdError):
        register_usage(Termbase(), relay_system, "machin", "fr", "grille-pain", "synonym")


def test_ellipsis_candidates_french_example(relay_system):
    assert ellipsis_candidates(relay_system, "relais de tension", "fr") == [
        RELAIS_SEUIL_TENSION
    ]


def test_ellipsis_candidates_exclude_full_normalized_form(relay_system):
    assert (
        RELAIS_SEUIL_TENSION
        not in ellipsis_candidates(relay_system, "relais à seuil de tension", "fr")
    )


def test_ellipsis_candidates_english_before_head(relay_system):
    assert ellipsis_candidates(relay_system, "voltage relay", "en") == [
        RELAIS_SEUIL_TENSION
    ]
    assert ellipsis_candidates(relay_system, "threshold relay", "en") == [
        RELAIS_SEUIL_TENSION
    ]


def test_ellipsis_candidates_unknown_form_is_empty(relay_system):
    assert ellipsis_candidates(relay_system, "grille-pain", "fr") == []


def _ranking_system():
    """Two concepts yield "base my": one by dropping 1 group, one by dropping 2."""
    system = ConceptSystem()
    for char in ("base", "w", "x", "y", "v"):
        system, _ = add_character(
            system,
            {"fr": char},
            modifier_forms=None if char == "base" else {"fr": (f"m{char}", "after_head")},
            char_id=char,
        )
    system, root = define_concept(system, differentia={"base"}, concept_id="root")
    system = set_denomination(system, root, "fr", "base")
    system, px = define_concept(system, genus=root, differentia={"x"}, concept_id="px")
    system, p = define_concept(system, genus=px, differentia={"y"}, concept_id="p")
    system, qw = define_concept(system, genus=root, differentia={"w"}, concept_id="qw")
    system, qwy = define_concept(system, genus=qw, differentia={"y"}, concept_id="qwy")
    system, q = define_concept(system, genus=qwy, differentia={"v"}, concept_id="q")
    return generate_denominations(system, "fr")


def test_ellipsis_candidates_rank_by_fewest_dropped_groups():
    system = _ranking_system()
    assert system.concepts["p"].denominations["fr"] == "base mx my"
    assert system.concepts["qwy"].denominations["fr"] == "base mw my"
    assert system.concepts["q"].denominations["fr"] == "base mw my mv"
    # "base my": p and qwy drop 1 group each (id order), q drops 2 -> last
    assert ellipsis_candidates(system, "base my", "fr") == ["p", "qwy", "q"]


def test_resolve_prefers_normalized(relay_system):
    result = resolve(Termbase(), relay_system, "relais à seuil de tension", "fr")
    assert result.provenance == "normalized"
    assert result.concepts == (RELAIS_SEUIL_TENSION,)
    assert not result.ambiguous


def test_resolve_case_folds(relay_system):
    result = resolve(Termbase(), relay_system, "RELAIS", "fr")
    assert result.provenance == "normalized"
    assert result.concepts == (RELAIS,)


def test_resolve_registered_usage(relay_system):
    termbase, _ = register_usage(
        Termbase(), relay_system, "relais de tension", "fr", RELAIS_SEUIL_TENSION, "ellipsis"
    )
    result = resolve(termbase, relay_system, "relais de tension", "fr")
    assert result.provenance == "usage"
    assert result.concepts == (RELAIS_SEUIL_TENSION,)


def test_resolve_falls_back_to_ellipsis(relay_system):
    result = resolve(Termbase(), relay_system, "relais de tension", "fr")
    assert result.provenance == "ellipsis"
    assert result.concepts == (RELAIS_SEUIL_TENSION,)
    assert not result.ambiguous


def test_resolve_unknown_form(relay_system):
    result = resolve(Termbase(), relay_system, "grille-pain", "fr")
    assert result.provenance == "none"
    assert result.concepts == ()
    assert not result.resolved


def test_resolve_flags_ambiguous_usage(relay_system):
    termbase = Termbase()
    termbase, _ = register_usage(termbase, relay_system, "capteur", "fr", RELAIS, "synonym")
    termbase, _ = register_usage(
        termbase, relay_system, "capteur", "fr", RELAIS_SEUIL, "synonym"
    )
    result = resolve(termbase, relay_system, "capteur", "fr")
    assert result.provenance == "usage"
    assert result.ambiguous
    assert result.concepts == (RELAIS, RELAIS_SEUIL)


def test_terms_for_concept_lists_normalized_then_usage(relay_system):
    termbase, _ = register_usage(
        Termbase(), relay_system, "relais de tension", "fr", RELAIS_SEUIL_TENSION, "ellipsis"
    )
    terms = terms_for_concept(termbase, relay_system, RELAIS_SEUIL_TENSION)
    statuses = [t.status for t in terms]
    assert statuses == [TermStatus.NORMALIZED, TermStatus.NORMALIZED, TermStatus.USAGE]
    assert terms[-1].form == "relais de tension"


@settings(deadline=None)
@given(concept_systems())
def test_every_normalized_term_resolves_to_its_concept(system):
    termbase = Termbase()
    for language in ("fr", "en"):
        system = generate_denominations(system, language)
        for concept_id, concept in system.concepts.items():
            result = resolve(termbase, system, concept.denominations[language], language)
            assert result.provenance == "normalized"
            assert result.concepts == (concept_id,)


@settings(deadline=None)
@given(concept_systems())
def test_ellipsis_never_returns_the_full_form_concept(system):
    for language in ("fr", "en"):
        system = generate_denominations(system, language)
        for concept_id, concept in system.concepts.items():
            candidates = ellipsis_candidates(
                system, concept.denominations[language], language
            )
            assert concept_id not in candidates


def _expected_sources(system, variant_tokens, language):
    """Brute force: every concept able to synthesize the variant by dropping
    a non-empty proper subset of its groups."""
    from itertools import combinations

    from ontoterm.textutil import tokenize

    expected = set()
    for concept in system.concepts.values():
        structure = term_structure(system, concept.id, language)
        if structure is None:
            continue
        head, groups = structure
        if len(groups) < 2:
            continue
        for size in range(1, len(groups)):
            for keep in combinations(range(len(groups)), size):
                if tokenize(synthesize(head, groups, keep=keep)) == variant_tokens:
                    expected.add(concept.id)
    return expected


@settings(deadline=None, max_examples=50)
@given(concept_systems(max_concepts=20))
def test_single_drop_variants_resolve_to_their_sources(system):
    from ontoterm.textutil import tokenize

    for language in ("fr", "en"):
        system = generate_denominations(system, language)
        for concept in system.concepts.values():
            structure = term_structure(system, concept.id, language)
            assert structure is not None
            head, groups = structure
            if len(groups) < 2:
                continue
            for dropped in range(len(groups)):
                keep = [i for i in range(len(groups)) if i != dropped]
                variant = synthesize(head, groups, keep=keep)
                candidates = ellipsis_candidates(system, variant, language)
                assert concept.id in candidates
                assert set(candidates) == _expected_sources(
                    system, tokenize(variant), language
                )


@settings(deadline=None)
@given(concept_systems())
def test_resolve_is_deterministic(system):
    system = generate_denominations(system, "fr")
    termbase = Termbase()
    queries = [c.denominations["fr"] for c in system.concepts.values()]
    queries += ["mfr0", "rootfr0 mfr1", "inconnu"]
    for query in queries:
        assert resolve(termbase, system, query, "fr") == resolve(
            termbase, system, query, "fr"
        )
