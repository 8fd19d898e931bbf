"""Command-line workflow for terminologists.

Each command maps onto one engine operation, reads the project file named
by ``--project`` (or the ONTOTERM_PROJECT environment variable), and writes
it back on success. Exit code 0 on success, nonzero with a diagnostic
otherwise; all output is deterministic.
"""

from __future__ import annotations

import functools
import json
from pathlib import Path

import click

from .core import (
    ConceptSystem,
    add_character,
    check_rigidity,
    check_system,
    define_concept,
    set_denomination,
)
from .docstore import DocStore, Document, index_document, search
from .errors import EngineError
from .fca import build_lattice
from .lexicon import Termbase, register_usage
from .naming import denominate, generate_denominations, motivation_report
from .persistence import import_context, load_project, save_project
from .service import ProjectService, make_server


def engine_errors(fn):
    """Translate engine errors into clean nonzero-exit diagnostics."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except EngineError as exc:
            raise click.ClickException(str(exc)) from exc

    return wrapper


def _project_path(ctx: click.Context) -> Path:
    path = ctx.obj
    if path is None:
        raise click.ClickException(
            "no project file given (use --project or set ONTOTERM_PROJECT)"
        )
    return path


def _split_pair(raw: str, what: str) -> tuple[str, str]:
    if "=" not in raw:
        raise click.ClickException(f"{what} must look like LANG=TEXT, got {raw!r}")
    lang, _, text = raw.partition("=")
    if not lang or not text:
        raise click.ClickException(f"{what} must look like LANG=TEXT, got {raw!r}")
    return lang, text


@click.group()
@click.option(
    "--project",
    "project",
    envvar="ONTOTERM_PROJECT",
    type=click.Path(path_type=Path),
    help="Project file to operate on (default: $ONTOTERM_PROJECT).",
)
@click.pass_context
def main(ctx, project):
    """Concept-system engine: define, name, lint, index and search."""
    ctx.obj = project


@main.command()
@click.argument("path", type=click.Path(path_type=Path))
@click.option("--force", is_flag=True, help="Overwrite an existing file.")
def init(path, force):
    """Create an empty project file at PATH."""
    if path.exists() and not force:
        raise click.ClickException(f"{path} already exists (use --force to overwrite)")
    save_project(ConceptSystem(), Termbase(), DocStore(), path)
    click.echo(f"initialized empty project at {path}")


@main.group()
def character():
    """Manage characters (typed units of knowledge)."""


@character.command("add")
@click.option("--id", "char_id", default=None, help="Explicit character id.")
@click.option(
    "--kind",
    type=click.Choice(["essential", "descriptive"]),
    default="essential",
    show_default=True,
)
@click.option("--label", "labels", multiple=True, metavar="LANG=TEXT", required=True)
@click.option(
    "--modifier",
    "modifiers",
    multiple=True,
    metavar="LANG=FORM[:POSITION]",
    help="Modifier form per language; POSITION is after_head (default) or before_head.",
)
@click.pass_context
@engine_errors
def character_add(ctx, char_id, kind, labels, modifiers):
    """Register a character with labels and optional modifier forms."""
    path = _project_path(ctx)
    system, termbase, store = load_project(path)
    label_map = dict(_split_pair(raw, "--label") for raw in labels)
    form_map = {}
    for raw in modifiers:
        lang, text = _split_pair(raw, "--modifier")
        position = "after_head"
        for suffix in (":after_head", ":before_head"):
            if text.endswith(suffix):
                text, position = text[: -len(suffix)], suffix[1:]
                break
        form_map[lang] = (text, position)
    system, new_id = add_character(
        system, label_map, kind=kind, modifier_forms=form_map, char_id=char_id
    )
    save_project(system, termbase, store, path)
    click.echo(new_id)


@main.group()
def concept():
    """Manage concepts (genus-differentia definitions)."""


@concept.command("define")
@click.option("--id", "concept_id", default=None, help="Explicit concept id.")
@click.option("--genus", default=None, help="Genus concept id (omit for a root).")
@click.option(
    "--differentia",
    "differentia",
    multiple=True,
    required=True,
    help="Character id; repeat for several.",
)
@click.pass_context
@engine_errors
def concept_define(ctx, concept_id, genus, differentia):
    """Define a concept from a genus and a differentia."""
    path = _project_path(ctx)
    system, termbase, store = load_project(path)
    system, new_id = define_concept(
        system, genus=genus, differentia=differentia, concept_id=concept_id
    )
    save_project(system, termbase, store, path)
    click.echo(new_id)


@main.command()
@click.argument("concept_id", required=False)
@click.option("--lang", required=True)
@click.option("--set", "override", default=None, help="Store this exact term instead of synthesizing.")
@click.option("--all", "all_concepts", is_flag=True, help="Generate names for every concept.")
@click.pass_context
@engine_errors
def name(ctx, concept_id, lang, override, all_concepts):
    """Synthesize (or set) the normalized term of a concept in one language."""
    path = _project_path(ctx)
    system, termbase, store = load_project(path)
    if all_concepts:
        if concept_id or override:
            raise click.ClickException("--all cannot be combined with a concept or --set")
        system = generate_denominations(system, lang)
        save_project(system, termbase, store, path)
        for cid in sorted(system.concepts):
            click.echo(f"{cid}\t{system.concepts[cid].denominations[lang]}")
        return
    if not concept_id:
        raise click.ClickException("give a concept id or --all")
    if override is not None:
        system = set_denomination(system, concept_id, lang, override)
        term = override
    else:
        system, term = denominate(system, concept_id, lang)
    save_project(system, termbase, store, path)
    click.echo(term)


@main.command()
@click.pass_context
@engine_errors
def lint(ctx):
    """Check system invariants, rigidity, and denomination motivation."""
    path = _project_path(ctx)
    system, termbase, store = load_project(path)
    violations = check_system(system) + check_rigidity(system) + motivation_report(system)
    for violation in violations:
        click.echo(f"{violation.rule}\t{violation.subject}\t{violation.message}")
    click.echo(f"{len(violations)} violations")
    if violations:
        ctx.exit(1)


@main.group()
def context():
    """Formal-context (object x character) tables."""


@context.command("import")
@click.argument("table", type=click.Path(path_type=Path))
@click.option("--delimiter", default=",", show_default=True)
@click.pass_context
@engine_errors
def context_import(ctx, table, delimiter):
    """Validate a context table against the project's characters."""
    path = _project_path(ctx)
    system, _, _ = load_project(path)
    imported = import_context(table, system, delimiter=delimiter)
    click.echo(f"{len(imported.objects)} objects x {len(imported.attributes)} characters")


@main.group()
def lattice():
    """Concept-lattice construction from context tables."""


@lattice.command("build")
@click.argument("table", type=click.Path(path_type=Path))
@click.option("--delimiter", default=",", show_default=True)
@click.pass_context
@engine_errors
def lattice_build(ctx, table, delimiter):
    """Print every formal concept of an imported context."""
    path = _project_path(ctx)
    system, _, _ = load_project(path)
    imported = import_context(table, system, delimiter=delimiter)
    concepts = build_lattice(imported)
    for formal in concepts:
        extent = ", ".join(o for o in imported.objects if o in formal.extent)
        intent = ", ".join(a for a in imported.attributes if a in formal.intent)
        click.echo(f"{{{extent}}} :: {{{intent}}}")
    click.echo(f"{len(concepts)} formal concepts")


@main.group()
def term():
    """Usage terms linked to concepts."""


@term.command("add-usage")
@click.argument("form")
@click.option("--lang", required=True)
@click.option("--concept", "concept_id", required=True)
@click.option("--kind", type=click.Choice(["ellipsis", "synonym", "other"]), default=None)
@click.pass_context
@engine_errors
def term_add_usage(ctx, form, lang, concept_id, kind):
    """Register a usage term (elliptical variant, synonym, ...)."""
    path = _project_path(ctx)
    system, termbase, store = load_project(path)
    termbase, registered = register_usage(
        termbase, system, form, lang, concept_id, variant_kind=kind
    )
    save_project(system, termbase, store, path)
    click.echo(f"{registered.form} ({registered.language}) -> {registered.concept}")


@main.group()
def doc():
    """Documents in the concept-indexed store."""


@doc.command("add")
@click.option("--id", "doc_id", required=True)
@click.option("--lang", required=True)
@click.option("--title", default="")
@click.option("--body", default=None)
@click.option("--file", "body_file", type=click.Path(path_type=Path), default=None)
@click.pass_context
@engine_errors
def doc_add(ctx, doc_id, lang, title, body, body_file):
    """Ingest and index one document."""
    if (body is None) == (body_file is None):
        raise click.ClickException("give exactly one of --body or --file")
    if body_file is not None:
        body = body_file.read_text(encoding="utf-8")
    path = _project_path(ctx)
    system, termbase, store = load_project(path)
    store, postings = index_document(
        store, termbase, system, Document(id=doc_id, language=lang, title=title, body=body)
    )
    save_project(system, termbase, store, path)
    for posting in postings:
        click.echo(f"{posting.concept}\t{posting.count}")
    click.echo(f"indexed {doc_id}: {len(postings)} postings")


@main.command("search")
@click.argument("query")
@click.option("--lang", required=True)
@click.option("--no-expand", is_flag=True, help="Match the query concepts strictly.")
@click.option("--json", "as_json", is_flag=True, help="Emit the result as JSON.")
@click.pass_context
@engine_errors
def search_command(ctx, query, lang, no_expand, as_json):
    """Concept-based search across all document languages."""
    path = _project_path(ctx)
    system, termbase, store = load_project(path)
    result = search(store, termbase, system, query, lang, expand=not no_expand)
    if as_json:
        from .service import search_payload

        click.echo(json.dumps(search_payload(result), ensure_ascii=False, sort_keys=True))
        return
    click.echo("matched: " + (", ".join(result.matched_concepts) or "-"))
    click.echo("expanded: " + (", ".join(result.expanded_concepts) or "-"))
    for hit in result.hits:
        click.echo(f"{hit.doc}\t{hit.language}\t{hit.score}")
    click.echo(f"{len(result.hits)} documents")


@main.command()
@click.option("--port", default=8080, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--ui",
    "ui_dir",
    type=click.Path(path_type=Path),
    default=None,
    help="Directory of static UI files to serve alongside the API.",
)
@click.pass_context
@engine_errors
def serve(ctx, port, host, ui_dir):
    """Serve the project over HTTP for the navigator UI."""
    path = _project_path(ctx)
    system, termbase, store = load_project(path)
    service = ProjectService(system, termbase, store, path=path)
    server = make_server(service, host=host, port=port, ui_dir=ui_dir)
    actual_host, actual_port = server.server_address[:2]
    click.echo(f"serving {path} on http://{actual_host}:{actual_port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:  # pragma: no cover - interactive only
        server.shutdown()


if __name__ == "__main__":
    main()
