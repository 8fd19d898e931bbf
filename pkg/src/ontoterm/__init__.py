"""Ontoterminology engine.

A domain is modeled as a formal concept system: typed characters, concepts
defined by genus and differentia, and a subsumption order by intent
inclusion. Normalized denominations are synthesized from a concept's place
in the system, usage terms (including elliptical variants) are linked to
concepts, and documents are indexed on concepts for cross-language search
with subsumption-based query expansion.
"""

from .core import (
    Character,
    CharacterKind,
    Concept,
    ConceptSystem,
    ModifierForm,
    Position,
    Violation,
    add_character,
    check_rigidity,
    check_system,
    children,
    conjoin,
    define_concept,
    descendants,
    disjoin,
    genus_chain,
    roots,
    set_denomination,
    subsumes,
)
from .docstore import (
    AmbiguousMatch,
    DocStore,
    Document,
    Posting,
    SearchHit,
    SearchResult,
    expand_query,
    index_document,
    remove_document,
    search,
)
from .errors import (
    ContextFormatError,
    DefinitionError,
    DuplicateIdError,
    DuplicateIntentError,
    EngineError,
    NamingError,
    ProjectFormatError,
    UnknownIdError,
    UnsupportedOperationError,
)
from .fca import FormalConcept, FormalContext, build_lattice, derive_extent, derive_intent
from .lexicon import (
    Resolution,
    Term,
    Termbase,
    TermStatus,
    VariantKind,
    ellipsis_candidates,
    match_index,
    normalized_terms,
    register_usage,
    resolve,
    terms_for_concept,
)
from .naming import (
    NamingConvention,
    denominate,
    generate_denominations,
    motivation_report,
    parse_denomination,
    synthesize,
    term_structure,
)
from .persistence import (
    dumps_project,
    import_context,
    load_project,
    loads_project,
    save_project,
)

__version__ = "0.1.0"
