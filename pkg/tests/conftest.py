"""Shared fixtures: the relay system from the worked naming example."""

import pytest

from ontoterm import (
    ConceptSystem,
    DocStore,
    Document,
    Termbase,
    add_character,
    define_concept,
    generate_denominations,
    index_document,
    register_usage,
    set_denomination,
)

RELAIS = "relais"
RELAIS_SEUIL = "relais-a-seuil"
RELAIS_SEUIL_TENSION = "relais-a-seuil-de-tension"


def build_relay_system() -> ConceptSystem:
    system = ConceptSystem()
    system, _ = add_character(
        system, {"fr": "relais", "en": "relay"}, char_id="relais"
    )
    system, _ = add_character(
        system,
        {"fr": "seuil", "en": "threshold"},
        modifier_forms={
            "fr": ("à seuil", "after_head"),
            "en": ("threshold", "before_head"),
        },
        char_id="seuil",
    )
    system, _ = add_character(
        system,
        {"fr": "tension", "en": "voltage"},
        modifier_forms={
            "fr": ("de tension", "after_head"),
            "en": ("voltage", "before_head"),
        },
        char_id="tension",
    )
    system, _ = define_concept(system, differentia={"relais"}, concept_id=RELAIS)
    system, _ = define_concept(
        system, genus=RELAIS, differentia={"seuil"}, concept_id=RELAIS_SEUIL
    )
    system, _ = define_concept(
        system,
        genus=RELAIS_SEUIL,
        differentia={"tension"},
        concept_id=RELAIS_SEUIL_TENSION,
    )
    system = set_denomination(system, RELAIS, "fr", "relais")
    system = set_denomination(system, RELAIS, "en", "relay")
    system = generate_denominations(system, "fr")
    system = generate_denominations(system, "en")
    return system


def build_relay_project() -> tuple[ConceptSystem, Termbase, DocStore]:
    system = build_relay_system()
    termbase = Termbase()
    termbase, _ = register_usage(
        termbase, system, "relais de tension", "fr", RELAIS_SEUIL_TENSION, "ellipsis"
    )
    store = DocStore()
    store, _ = index_document(
        store,
        termbase,
        system,
        Document(
            id="doc-fr",
            language="fr",
            title="Protection du circuit",
            body="Le relais à seuil de tension protège le circuit.",
        ),
    )
    store, _ = index_document(
        store,
        termbase,
        system,
        Document(
            id="doc-en",
            language="en",
            title="Circuit protection",
            body="The voltage threshold relay protects the circuit.",
        ),
    )
    return system, termbase, store


@pytest.fixture
def relay_system() -> ConceptSystem:
    return build_relay_system()


@pytest.fixture
def relay_project() -> tuple[ConceptSystem, Termbase, DocStore]:
    return build_relay_project()
