#!/usr/bin/env python3
"""Build the bilingual relay demo project and write it to disk.

Creates the worked example used throughout the tests and the README: three
characters, the three-concept relay chain with generated French and English
names, the elliptical usage term "relais de tension", and one indexed
document per language. Also writes a small object x character context table
next to the project file.

Usage: python3 scripts/build_fixture.py [--out PATH]
"""

import argparse
from pathlib import Path

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
    save_project,
    set_denomination,
)


def build_project() -> tuple[ConceptSystem, Termbase, DocStore]:
    system = ConceptSystem()
    system, _ = add_character(system, {"fr": "relais", "en": "relay"}, char_id="relais")
    system, _ = add_character(
        system,
        {"fr": "seuil", "en": "threshold"},
        modifier_forms={"fr": ("à seuil", "after_head"), "en": ("threshold", "before_head")},
        char_id="seuil",
    )
    system, _ = add_character(
        system,
        {"fr": "tension", "en": "voltage"},
        modifier_forms={"fr": ("de tension", "after_head"), "en": ("voltage", "before_head")},
        char_id="tension",
    )
    system, relais = define_concept(system, differentia={"relais"}, concept_id="relais")
    system, seuil = define_concept(
        system, genus=relais, differentia={"seuil"}, concept_id="relais-a-seuil"
    )
    system, tension = define_concept(
        system, genus=seuil, differentia={"tension"}, concept_id="relais-a-seuil-de-tension"
    )
    system = set_denomination(system, relais, "fr", "relais")
    system = set_denomination(system, relais, "en", "relay")
    system = generate_denominations(system, "fr")
    system = generate_denominations(system, "en")

    termbase = Termbase()
    termbase, _ = register_usage(
        termbase, system, "relais de tension", "fr", tension, "ellipsis"
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


CONTEXT_TABLE = """objet,relais,seuil,tension
r-simple,1,0,0
r-seuil,1,1,0
r-seuil-tension,1,1,1
"""


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path("relay-project.json"),
        help="where to write the project file (default: ./relay-project.json)",
    )
    args = parser.parse_args()
    system, termbase, store = build_project()
    save_project(system, termbase, store, args.out)
    table_path = args.out.with_name(args.out.stem + "-context.csv")
    table_path.write_text(CONTEXT_TABLE, encoding="utf-8")
    print(f"wrote {args.out} ({len(system.concepts)} concepts, {len(store.documents)} documents)")
    print(f"wrote {table_path}")


if __name__ == "__main__":
    main()
