/**
 * Application wiring: one ApiClient, one ViewState, DOM panels for the
 * tree, the search results, the inspector and the document viewer. All data
 * shown comes from the documented endpoints; nothing is recomputed client
 * side.
 */

import { ApiClient, ApiError } from "./api.js";
import {
  ViewState,
  applyResults,
  beginSearch,
  initialState,
  selectConcept,
} from "./state.js";
import { renderConceptTree } from "./tree.js";
import {
  renderSearchError,
  renderSearchIdle,
  renderSearchResults,
} from "./search.js";
import {
  renderInspector,
  renderInspectorEmpty,
  renderInspectorNotFound,
} from "./inspector.js";

export interface App {
  state(): ViewState;
  refreshTree(): Promise<void>;
  runSearch(query: string, language: string, expand: boolean): Promise<void>;
  select(conceptId: string): Promise<void>;
  openDocument(docId: string): Promise<void>;
}

interface Panels {
  tree: HTMLElement;
  results: HTMLElement;
  inspector: HTMLElement;
  document: HTMLElement;
  banner: HTMLElement;
  breadcrumb: HTMLElement;
  form: HTMLFormElement;
  query: HTMLInputElement;
  language: HTMLSelectElement;
  expand: HTMLInputElement;
}

function panel<T extends HTMLElement>(doc: Document, id: string): T {
  const element = doc.getElementById(id);
  if (element === null) {
    throw new Error(`missing #${id} in the page shell`);
  }
  return element as T;
}

export function bootstrap(doc: Document, api: ApiClient): App {
  const panels: Panels = {
    tree: panel(doc, "tree"),
    results: panel(doc, "results"),
    inspector: panel(doc, "inspector"),
    document: panel(doc, "document"),
    banner: panel(doc, "banner"),
    breadcrumb: panel(doc, "breadcrumb"),
    form: panel<HTMLFormElement>(doc, "search-form"),
    query: panel<HTMLInputElement>(doc, "query"),
    language: panel<HTMLSelectElement>(doc, "language"),
    expand: panel<HTMLInputElement>(doc, "expand"),
  };

  let state = initialState(panels.language.value || "fr");
  let knownIds: ReadonlySet<string> = new Set();

  function showBanner(message: string, retry: () => void): void {
    panels.banner.textContent = "";
    panels.banner.hidden = false;
    const text = doc.createElement("span");
    text.textContent = message;
    const button = doc.createElement("button");
    button.type = "button";
    button.id = "retry";
    button.textContent = "retry";
    button.addEventListener("click", retry);
    panels.banner.appendChild(text);
    panels.banner.appendChild(button);
  }

  function hideBanner(): void {
    panels.banner.hidden = true;
    panels.banner.textContent = "";
  }

  function renderBreadcrumb(): void {
    panels.breadcrumb.textContent = "";
    state.breadcrumb.forEach((conceptId, index) => {
      if (index > 0) {
        const sep = doc.createElement("span");
        sep.className = "crumb-sep";
        sep.textContent = " › ";
        panels.breadcrumb.appendChild(sep);
      }
      const crumb = doc.createElement("button");
      crumb.type = "button";
      crumb.className = "crumb";
      crumb.dataset.conceptId = conceptId;
      crumb.textContent = conceptId;
      crumb.addEventListener("click", () => void app.select(conceptId));
      panels.breadcrumb.appendChild(crumb);
    });
  }

  const app: App = {
    state: () => state,

    async refreshTree(): Promise<void> {
      try {
        const tree = await api.getTree();
        knownIds = new Set(tree.concepts.map((node) => node.id));
        renderConceptTree(panels.tree, tree, {
          onSelect: (conceptId) => void app.select(conceptId),
        });
        hideBanner();
      } catch (error) {
        const message =
          error instanceof ApiError && error.status !== 0
            ? error.message
            : "Concept service unreachable.";
        showBanner(message, () => void app.refreshTree());
      }
    },

    async runSearch(query: string, language: string, expand: boolean): Promise<void> {
      state = beginSearch(state, query, language, expand);
      const requestId = state.pendingRequest;
      panels.query.value = query;
      panels.language.value = language;
      panels.expand.checked = expand;
      try {
        const data = await api.search(query, language, expand);
        state = applyResults(state, requestId, data);
        if (state.resultRequest === requestId) {
          renderSearchResults(panels.results, data, {
            onOpenDocument: (docId) => void app.openDocument(docId),
          });
        }
      } catch (error) {
        if (requestId !== state.pendingRequest) {
          return; // a newer search owns the panel
        }
        const message = error instanceof ApiError ? error.message : String(error);
        renderSearchError(panels.results, message);
      }
    },

    async select(conceptId: string): Promise<void> {
      state = selectConcept(state, conceptId, knownIds);
      renderBreadcrumb();
      try {
        const detail = await api.getConcept(conceptId);
        renderInspector(panels.inspector, detail, {
          onSearchFrom: (query, language) =>
            void app.runSearch(query, language, panels.expand.checked),
          onSelect: (id) => void app.select(id),
        });
      } catch (error) {
        if (error instanceof ApiError && error.status === 404) {
          renderInspectorNotFound(panels.inspector, conceptId);
        } else {
          const message = error instanceof ApiError ? error.message : String(error);
          showBanner(message, () => void app.select(conceptId));
        }
      }
    },

    async openDocument(docId: string): Promise<void> {
      try {
        const document = await api.getDocument(docId);
        panels.document.textContent = "";
        const heading = doc.createElement("h3");
        heading.textContent = document.title || document.id;
        const meta = doc.createElement("p");
        meta.className = "doc-meta";
        meta.textContent = `${document.id} — ${document.language}`;
        const body = doc.createElement("p");
        body.className = "doc-body";
        body.textContent = document.body;
        panels.document.appendChild(heading);
        panels.document.appendChild(meta);
        panels.document.appendChild(body);
      } catch (error) {
        const message = error instanceof ApiError ? error.message : String(error);
        panels.document.textContent = message;
      }
    },
  };

  panels.form.addEventListener("submit", (event) => {
    event.preventDefault();
    void app.runSearch(panels.query.value, panels.language.value, panels.expand.checked);
  });
  panels.expand.addEventListener("change", () => {
    // toggling expansion re-queries so hits visibly grow or shrink
    if (state.query !== "") {
      void app.runSearch(state.query, state.queryLanguage, panels.expand.checked);
    }
  });

  renderSearchIdle(panels.results);
  renderInspectorEmpty(panels.inspector);
  void app.refreshTree();
  return app;
}

// Auto-boot only on a real page shell (tests build their own DOM and call
// bootstrap explicitly).
if (typeof document !== "undefined" && document.querySelector("[data-autoboot]") !== null) {
  bootstrap(document, new ApiClient(""));
}
