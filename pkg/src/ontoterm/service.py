"""Read-mostly HTTP service exposing the engine to the navigator UI.

Every response is a JSON envelope ``{"ok", "data", "error"}`` with exactly
one of data/error populated. GET handlers read one immutable snapshot and
never mutate state; document ingestion is serialized behind a single writer
and swaps the snapshot atomically.
"""

from __future__ import annotations

import json
import mimetypes
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, unquote, urlparse

from .core import ConceptSystem, children, roots
from .docstore import DocStore, Document, SearchResult, index_document, search
from .errors import EngineError
from .lexicon import Termbase, TermStatus, terms_for_concept
from .persistence import save_project


def envelope_ok(data) -> dict:
    return {"ok": True, "data": data, "error": None}


def envelope_error(message: str) -> dict:
    return {"ok": False, "data": None, "error": message}


def render_envelope(envelope: dict) -> bytes:
    """Canonical envelope bytes; tests compare endpoint output against this."""
    return json.dumps(envelope, ensure_ascii=False, sort_keys=True).encode("utf-8")


def concept_tree_payload(system: ConceptSystem) -> dict:
    """Genus-link forest: every concept with its denominations and children."""
    return {
        "roots": roots(system),
        "concepts": [
            {
                "id": concept_id,
                "genus": system.concepts[concept_id].genus,
                "denominations": dict(
                    sorted(system.concepts[concept_id].denominations.items())
                ),
                "children": children(system, concept_id),
            }
            for concept_id in sorted(system.concepts)
        ],
    }


def concept_detail_payload(
    system: ConceptSystem, termbase: Termbase, store: DocStore, concept_id: str
) -> dict:
    """Full inspector payload; intent entries carry the character kind so the
    UI can distinguish essential from descriptive characters."""
    concept = system.concept(concept_id)
    return {
        "id": concept.id,
        "genus": concept.genus,
        "intent": [
            {
                "id": char_id,
                "kind": system.characters[char_id].kind.value,
                "labels": dict(sorted(system.characters[char_id].labels.items())),
            }
            for char_id in sorted(concept.intent)
        ],
        "differentia": sorted(concept.differentia),
        "denominations": dict(sorted(concept.denominations.items())),
        "usage_terms": [
            {
                "form": term.form,
                "language": term.language,
                "variant_kind": term.variant_kind.value if term.variant_kind else None,
            }
            for term in terms_for_concept(termbase, system, concept_id)
            if term.status is TermStatus.USAGE
        ],
        "document_count": len(store.postings.get(concept_id, {})),
    }


def search_payload(result: SearchResult) -> dict:
    return {
        "matched_concepts": list(result.matched_concepts),
        "expanded_concepts": list(result.expanded_concepts),
        "hits": [
            {"doc": hit.doc, "language": hit.language, "score": hit.score}
            for hit in result.hits
        ],
    }


def document_payload(doc: Document) -> dict:
    return {"id": doc.id, "language": doc.language, "title": doc.title, "body": doc.body}


class ProjectService:
    """Live project state: one snapshot, one writer.

    When constructed with a path, successful ingestions are persisted back
    to that project file before the snapshot swap.
    """

    def __init__(
        self,
        system: ConceptSystem,
        termbase: Termbase,
        store: DocStore,
        path: str | Path | None = None,
    ):
        self._snapshot = (system, termbase, store)
        self._write_lock = threading.Lock()
        self.path = Path(path) if path is not None else None

    @property
    def snapshot(self) -> tuple[ConceptSystem, Termbase, DocStore]:
        return self._snapshot

    def ingest_document(self, payload) -> dict:
        """Index one document (write path; serialized, atomic swap)."""
        if not isinstance(payload, dict):
            raise EngineError("request body must be a JSON object")
        fields = {}
        for key in ("id", "language", "title", "body"):
            value = payload.get(key)
            if not isinstance(value, str):
                raise EngineError(f"document field {key!r} must be a string")
            fields[key] = value
        if not fields["id"] or not fields["language"]:
            raise EngineError("document id and language must be non-empty")
        with self._write_lock:
            system, termbase, store = self._snapshot
            successor, postings = index_document(
                store, termbase, system, Document(**fields)
            )
            if self.path is not None:
                save_project(system, termbase, successor, self.path)
            self._snapshot = (system, termbase, successor)
        return {
            "id": fields["id"],
            "postings": [
                {"concept": p.concept, "count": p.count} for p in postings
            ],
        }


class _Handler(BaseHTTPRequestHandler):
    service: ProjectService
    ui_dir: Path | None = None
    protocol_version = "HTTP/1.1"

    def log_message(self, *args):  # keep test and CLI output clean
        pass

    def _send(self, status: int, envelope: dict):
        body = render_envelope(envelope)
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def _send_static(self, relative: str):
        assert self.ui_dir is not None
        if relative in ("", "/"):
            relative = "index.html"
        target = (self.ui_dir / relative.lstrip("/")).resolve()
        if not str(target).startswith(str(self.ui_dir.resolve())) or not target.is_file():
            self._send(404, envelope_error(f"no such path: {relative!r}"))
            return
        body = target.read_bytes()
        content_type = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        self.send_response(200)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self):
        self._send(200, envelope_ok({}))

    def do_GET(self):
        parsed = urlparse(self.path)
        parts = [unquote(p) for p in parsed.path.split("/") if p]
        if not parts or parts[0] != "api":
            if self.ui_dir is not None:
                self._send_static(parsed.path)
            else:
                self._send(404, envelope_error(f"unknown endpoint: {parsed.path}"))
            return
        system, termbase, store = self.service.snapshot
        if parts == ["api", "concepts"]:
            self._send(200, envelope_ok(concept_tree_payload(system)))
        elif len(parts) == 3 and parts[1] == "concepts":
            if parts[2] not in system.concepts:
                self._send(404, envelope_error(f"unknown concept: {parts[2]!r}"))
            else:
                self._send(
                    200,
                    envelope_ok(
                        concept_detail_payload(system, termbase, store, parts[2])
                    ),
                )
        elif parts == ["api", "search"]:
            params = parse_qs(parsed.query, keep_blank_values=True)
            query = params.get("q", [None])[0]
            language = params.get("lang", [None])[0]
            raw_expand = params.get("expand", ["true"])[0]
            if not query or not language:
                self._send(400, envelope_error("search requires q= and lang= parameters"))
                return
            if raw_expand.lower() not in ("true", "false", "1", "0"):
                self._send(400, envelope_error(f"malformed expand flag: {raw_expand!r}"))
                return
            expand = raw_expand.lower() in ("true", "1")
            result = search(store, termbase, system, query, language, expand=expand)
            self._send(200, envelope_ok(search_payload(result)))
        elif len(parts) == 3 and parts[1] == "documents":
            doc = store.documents.get(parts[2])
            if doc is None:
                self._send(404, envelope_error(f"unknown document: {parts[2]!r}"))
            else:
                self._send(200, envelope_ok(document_payload(doc)))
        else:
            self._send(404, envelope_error(f"unknown endpoint: {parsed.path}"))

    def do_POST(self):
        parsed = urlparse(self.path)
        parts = [unquote(p) for p in parsed.path.split("/") if p]
        if parts != ["api", "documents"]:
            self._send(404, envelope_error(f"unknown endpoint: {parsed.path}"))
            return
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        try:
            payload = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            self._send(400, envelope_error("request body must be valid JSON"))
            return
        try:
            data = self.service.ingest_document(payload)
        except EngineError as exc:
            self._send(400, envelope_error(str(exc)))
            return
        self._send(200, envelope_ok(data))


def make_server(
    service: ProjectService,
    host: str = "127.0.0.1",
    port: int = 8080,
    ui_dir: str | Path | None = None,
) -> ThreadingHTTPServer:
    """Build the HTTP server; ``port=0`` picks a free port (see
    ``server.server_address``)."""
    handler = type(
        "ProjectHandler",
        (_Handler,),
        {"service": service, "ui_dir": Path(ui_dir) if ui_dir else None},
    )
    return ThreadingHTTPServer((host, port), handler)
