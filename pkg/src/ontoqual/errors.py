"""Exception hierarchy shared by the library and the CLI."""


class OntoQualError(Exception):
    """Base class for every error raised by ontoqual."""


class InventoryParseError(OntoQualError):
    """An inventory document is not well formed.

    ``locus`` is either ``"line N, column M"`` for JSON syntax errors or a
    field path such as ``terms[3].defined`` for structural problems.
    """

    def __init__(self, message, locus=None):
        self.locus = locus
        super().__init__(f"{locus}: {message}" if locus else message)


class SchemaVersionError(InventoryParseError):
    pass


class InvalidInventoryError(OntoQualError):
    """Raised when an operation needs a valid inventory and got violations."""

    def __init__(self, entity_name, violations):
        self.entity_name = entity_name
        self.violations = list(violations)
        lines = "\n".join(f"  - {v}" for v in self.violations)
        super().__init__(f"inventory '{entity_name}' is invalid:\n{lines}")


class ContractError(OntoQualError, ValueError):
    """A function was called outside its precondition."""


class DomainError(ContractError):
    """An elementary function input lies outside its domain."""


class EmptyOntologyError(ContractError):
    pass


class NoRelationshipsError(ContractError):
    pass


class ModelError(OntoQualError):
    """A requirements model file or tree is malformed."""


class BindingError(OntoQualError):
    """Elementary results do not match the leaves of a requirements tree."""


class PairingError(OntoQualError):
    """Before/after inventories do not describe the same entity."""
