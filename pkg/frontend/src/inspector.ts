/**
 * Concept inspector: normalized terms per language, usage variants with
 * their kind, and intent characters with essential/descriptive told apart.
 */

import type { ConceptDetail } from "./api.js";

export interface InspectorCallbacks {
  onSearchFrom(query: string, language: string): void;
  onSelect(conceptId: string): void;
}

export function renderInspectorEmpty(container: HTMLElement): void {
  container.textContent = "";
  const hint = container.ownerDocument.createElement("p");
  hint.className = "empty-state";
  hint.textContent = "Select a concept to inspect it.";
  container.appendChild(hint);
}

export function renderInspectorNotFound(container: HTMLElement, conceptId: string): void {
  container.textContent = "";
  const panel = container.ownerDocument.createElement("p");
  panel.className = "not-found";
  panel.textContent = `Concept "${conceptId}" was not found (it may have been removed).`;
  container.appendChild(panel);
}

export function renderInspector(
  container: HTMLElement,
  detail: ConceptDetail,
  callbacks: InspectorCallbacks,
): void {
  const doc = container.ownerDocument;
  container.textContent = "";

  const heading = doc.createElement("h2");
  heading.textContent = detail.id;
  container.appendChild(heading);

  const facts = doc.createElement("dl");
  facts.className = "facts";
  if (detail.genus !== null) {
    const genusTerm = doc.createElement("dt");
    genusTerm.textContent = "Genus";
    const genusValue = doc.createElement("dd");
    genusValue.className = "genus-row";
    const link = doc.createElement("button");
    link.type = "button";
    link.className = "genus-link";
    link.textContent = detail.genus;
    link.addEventListener("click", () => callbacks.onSelect(detail.genus!));
    genusValue.appendChild(link);
    facts.appendChild(genusTerm);
    facts.appendChild(genusValue);
  }
  const docsTerm = doc.createElement("dt");
  docsTerm.textContent = "Documents";
  const docsValue = doc.createElement("dd");
  docsValue.className = "document-count";
  docsValue.textContent = String(detail.document_count);
  facts.appendChild(docsTerm);
  facts.appendChild(docsValue);
  container.appendChild(facts);

  const namesHeading = doc.createElement("h3");
  namesHeading.textContent = "Normalized terms";
  container.appendChild(namesHeading);
  const names = doc.createElement("ul");
  names.className = "denominations";
  for (const [language, termText] of Object.entries(detail.denominations).sort(([a], [b]) =>
    a.localeCompare(b),
  )) {
    const item = doc.createElement("li");
    item.dataset.language = language;
    const label = doc.createElement("span");
    label.className = "term";
    label.textContent = `${language}: ${termText}`;
    const searchFrom = doc.createElement("button");
    searchFrom.type = "button";
    searchFrom.className = "search-from";
    searchFrom.textContent = "search from here";
    searchFrom.addEventListener("click", () => callbacks.onSearchFrom(termText, language));
    item.appendChild(label);
    item.appendChild(searchFrom);
    names.appendChild(item);
  }
  container.appendChild(names);

  if (detail.usage_terms.length > 0) {
    const usageHeading = doc.createElement("h3");
    usageHeading.textContent = "Usage terms";
    container.appendChild(usageHeading);
    const usage = doc.createElement("ul");
    usage.className = "usage-terms";
    for (const term of detail.usage_terms) {
      const item = doc.createElement("li");
      item.className = "usage-term";
      item.dataset.kind = term.variant_kind ?? "unspecified";
      item.textContent = `${term.form} (${term.language})`;
      if (term.variant_kind !== null) {
        const badge = doc.createElement("span");
        badge.className = "kind-badge";
        badge.textContent = term.variant_kind;
        item.appendChild(badge);
      }
      usage.appendChild(item);
    }
    container.appendChild(usage);
  }

  const charactersHeading = doc.createElement("h3");
  charactersHeading.textContent = "Characters";
  container.appendChild(charactersHeading);
  const characters = doc.createElement("ul");
  characters.className = "characters";
  const differentia = new Set(detail.differentia);
  for (const character of detail.intent) {
    const item = doc.createElement("li");
    item.className = `character ${character.kind}`;
    item.dataset.kind = character.kind;
    const labels = Object.entries(character.labels)
      .sort(([a], [b]) => a.localeCompare(b))
      .map(([lang, text]) => `${lang}: ${text}`)
      .join(", ");
    item.textContent = labels ? `${character.id} — ${labels}` : character.id;
    const kindBadge = doc.createElement("span");
    kindBadge.className = "kind-badge";
    kindBadge.textContent = character.kind;
    item.appendChild(kindBadge);
    if (differentia.has(character.id)) {
      const diffBadge = doc.createElement("span");
      diffBadge.className = "diff-badge";
      diffBadge.textContent = "differentia";
      item.appendChild(diffBadge);
    }
    characters.appendChild(item);
  }
  container.appendChild(characters);
}
