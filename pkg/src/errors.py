"""Exception hierarchy. Each class knows the CLI exit code it maps to."""


class TrustLogicError(Exception):
    exit_code = 1


class FormulaSyntaxError(TrustLogicError, ValueError):
    """Malformed formula text, tagged with the offending position."""

    exit_code = 2

    def __init__(self, message: str, text: str = "", position: int = 0, line: int = 1, column: int = 1):
        self.message = message
        self.text = text
        self.position = position
        self.line = line
        self.column = column
        super().__init__(f"{message} at line {line}, column {column}")


class ModelValidationError(TrustLogicError, ValueError):
    """A model file violates the file format or a model invariant."""

    exit_code = 3

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)


class ProofFormatError(TrustLogicError, ValueError):
    """A proof file is not well-formed (as opposed to a proof that is rejected)."""

    exit_code = 3

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)


class SemanticError(TrustLogicError):
    exit_code = 4


class UnknownWorldError(SemanticError, LookupError):
    def __init__(self, world: str):
        self.world = world
        super().__init__(f"unknown world '{world}'")


class UnknownVariableError(SemanticError, LookupError):
    def __init__(self, variables: list[str]):
        self.variables = variables
        super().__init__(f"unknown variable(s): {', '.join(variables)}")


class EmptyModelError(SemanticError):
    def __init__(self) -> None:
        super().__init__("no worlds to evaluate")


class AtomCapExceededError(SemanticError):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} distinct atoms after abstraction exceeds the cap of {cap}")


class InstantiationError(SemanticError, ValueError):
    """Raised when an axiom schema cannot be instantiated with a substitution."""
