"""Exception hierarchy shared across the engine."""


class EngineError(Exception):
    """Base class for all engine errors."""


class UnknownIdError(EngineError):
    """A referenced character, concept, object or document id does not exist."""

    def __init__(self, kind: str, ident: str):
        super().__init__(f"unknown {kind}: {ident!r}")
        self.kind = kind
        self.ident = ident


class DuplicateIdError(EngineError):
    """An id is already taken within the system."""


class DuplicateIntentError(EngineError):
    """A concept with the same character combination already exists."""


class DefinitionError(EngineError):
    """A precondition of a definition operation was violated."""


class UnsupportedOperationError(EngineError):
    """Requested construction has no defined semantics (e.g. disjunction)."""


class NamingError(EngineError):
    """Denomination synthesis or lookup failed."""


class ProjectFormatError(EngineError):
    """A project file is malformed or violates system invariants.

    ``path`` points into the JSON document (e.g. ``concepts[2].genus``).
    """

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class ContextFormatError(EngineError):
    """A formal-context table is malformed."""
