"""Independent reference computations the implementation is checked against.

These deliberately use the naive route (exhaustive enumeration, direct
scans) and never call the code paths they verify.
"""

from itertools import combinations

from ontoterm.fca import FormalContext


def brute_force_lattice(context: FormalContext) -> set:
    """All formal concepts by closing every attribute subset (2^n of them)."""
    concepts = set()
    attrs = list(context.attributes)
    has = {
        (obj, attr): bool(cell)
        for obj, row in zip(context.objects, context.incidence)
        for attr, cell in zip(context.attributes, row)
    }
    for size in range(len(attrs) + 1):
        for subset in combinations(attrs, size):
            extent = frozenset(
                obj for obj in context.objects if all(has[obj, a] for a in subset)
            )
            intent = frozenset(
                a for a in attrs if all(has[obj, a] for obj in extent)
            )
            concepts.add((extent, intent))
    return concepts


def direct_scan_score(store, expanded_concepts, doc_id) -> int:
    """Recompute one document's score by scanning all postings."""
    total = 0
    for concept_id in expanded_concepts:
        for posting_doc, count in store.postings.get(concept_id, {}).items():
            if posting_doc == doc_id:
                total += count
    return total
