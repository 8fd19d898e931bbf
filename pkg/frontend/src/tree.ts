/**
 * Genus-link forest rendering. Child lists are materialized lazily on the
 * first expand; clicking a label selects the concept.
 */

import type { ConceptTree, TreeNode } from "./api.js";

export interface TreeCallbacks {
  onSelect(conceptId: string): void;
}

function nodeLabel(node: TreeNode): string {
  const languages = Object.keys(node.denominations).sort();
  return languages.length > 0 ? node.denominations[languages[0]] : node.id;
}

export function renderConceptTree(
  container: HTMLElement,
  tree: ConceptTree,
  callbacks: TreeCallbacks,
): void {
  container.textContent = "";
  if (tree.concepts.length === 0) {
    const empty = container.ownerDocument.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No concepts in this project yet.";
    container.appendChild(empty);
    return;
  }
  const byId = new Map(tree.concepts.map((node) => [node.id, node]));
  container.appendChild(buildList(container.ownerDocument, tree.roots, byId, callbacks));
}

function buildList(
  doc: Document,
  ids: string[],
  byId: Map<string, TreeNode>,
  callbacks: TreeCallbacks,
): HTMLUListElement {
  const list = doc.createElement("ul");
  list.className = "concept-list";
  for (const id of ids) {
    const node = byId.get(id);
    if (node) {
      list.appendChild(buildItem(doc, node, byId, callbacks));
    }
  }
  return list;
}

function buildItem(
  doc: Document,
  node: TreeNode,
  byId: Map<string, TreeNode>,
  callbacks: TreeCallbacks,
): HTMLLIElement {
  const item = doc.createElement("li");
  item.className = "concept-node";
  item.dataset.conceptId = node.id;

  if (node.children.length > 0) {
    const toggle = doc.createElement("button");
    toggle.type = "button";
    toggle.className = "toggle";
    toggle.textContent = "+";
    toggle.setAttribute("aria-label", `expand ${node.id}`);
    toggle.addEventListener("click", () => {
      let childList = item.querySelector(":scope > ul");
      if (childList === null) {
        // lazy: children are built the first time the node is opened
        childList = buildList(doc, node.children, byId, callbacks);
        item.appendChild(childList);
        toggle.textContent = "−";
      } else {
        const hidden = (childList as HTMLElement).hidden;
        (childList as HTMLElement).hidden = !hidden;
        toggle.textContent = hidden ? "−" : "+";
      }
    });
    item.appendChild(toggle);
  } else {
    const bullet = doc.createElement("span");
    bullet.className = "leaf-bullet";
    bullet.textContent = "·";
    item.appendChild(bullet);
  }

  const label = doc.createElement("button");
  label.type = "button";
  label.className = "concept-label";
  label.dataset.conceptId = node.id;
  label.textContent = nodeLabel(node);
  label.title = Object.entries(node.denominations)
    .sort(([a], [b]) => a.localeCompare(b))
    .map(([lang, term]) => `${lang}: ${term}`)
    .join("\n");
  label.addEventListener("click", () => callbacks.onSelect(node.id));
  item.appendChild(label);
  return item;
}
