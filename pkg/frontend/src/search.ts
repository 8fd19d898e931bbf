/**
 * Search result panel: matched concepts vs. concepts added by expansion are
 * styled apart, hits are grouped by document language, and every number
 * shown comes straight from the service payload.
 */

import type { SearchData } from "./api.js";

export interface SearchCallbacks {
  onOpenDocument(docId: string): void;
}

export function renderSearchIdle(container: HTMLElement): void {
  container.textContent = "";
  const hint = container.ownerDocument.createElement("p");
  hint.className = "empty-state";
  hint.textContent = "Search for a term to see matching documents in every language.";
  container.appendChild(hint);
}

export function renderSearchError(container: HTMLElement, message: string): void {
  container.textContent = "";
  const error = container.ownerDocument.createElement("p");
  error.className = "search-error";
  error.textContent = message;
  container.appendChild(error);
}

export function renderSearchResults(
  container: HTMLElement,
  data: SearchData,
  callbacks: SearchCallbacks,
): void {
  const doc = container.ownerDocument;
  container.textContent = "";

  if (data.matched_concepts.length === 0) {
    const none = doc.createElement("p");
    none.className = "empty-state no-match";
    none.textContent = "No concepts matched this query.";
    container.appendChild(none);
    return;
  }

  const concepts = doc.createElement("div");
  concepts.className = "concept-chips";
  const matched = new Set(data.matched_concepts);
  for (const conceptId of data.matched_concepts) {
    concepts.appendChild(chip(doc, conceptId, "matched"));
  }
  for (const conceptId of data.expanded_concepts) {
    if (!matched.has(conceptId)) {
      concepts.appendChild(chip(doc, conceptId, "expansion"));
    }
  }
  container.appendChild(concepts);

  if (data.hits.length === 0) {
    const none = doc.createElement("p");
    none.className = "empty-state";
    none.textContent = "No documents indexed on these concepts.";
    container.appendChild(none);
    return;
  }

  const byLanguage = new Map<string, typeof data.hits>();
  for (const hit of data.hits) {
    const group = byLanguage.get(hit.language) ?? [];
    group.push(hit);
    byLanguage.set(hit.language, group);
  }
  for (const language of [...byLanguage.keys()].sort()) {
    const section = doc.createElement("section");
    section.className = "hit-group";
    section.dataset.language = language;
    const heading = doc.createElement("h3");
    heading.textContent = `Documents (${language})`;
    section.appendChild(heading);
    const list = doc.createElement("ul");
    for (const hit of byLanguage.get(language)!) {
      const item = doc.createElement("li");
      item.className = "hit";
      item.dataset.doc = hit.doc;
      item.dataset.language = hit.language;
      const open = doc.createElement("button");
      open.type = "button";
      open.className = "hit-doc";
      open.textContent = hit.doc;
      open.addEventListener("click", () => callbacks.onOpenDocument(hit.doc));
      const score = doc.createElement("span");
      score.className = "hit-score";
      score.textContent = String(hit.score);
      item.appendChild(open);
      item.appendChild(score);
      list.appendChild(item);
    }
    section.appendChild(list);
    container.appendChild(section);
  }
}

function chip(doc: Document, conceptId: string, kind: "matched" | "expansion"): HTMLElement {
  const span = doc.createElement("span");
  span.className = `chip ${kind}`;
  span.dataset.concept = conceptId;
  span.textContent = conceptId;
  span.title = kind === "matched" ? "matched by the query" : "added by expansion";
  return span;
}
