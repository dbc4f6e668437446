"""Exception hierarchy shared by the engine and the command line front end."""


class SuperGeomError(Exception):
    """Base class. ``exit_code`` is what the CLI returns when this escapes a command."""

    exit_code = 2


class PreconditionError(SuperGeomError, ValueError):
    """A mathematical precondition of an operation does not hold."""


class RingMismatchError(PreconditionError):
    pass


class ParityError(PreconditionError):
    pass


class HomogeneityError(PreconditionError):
    pass


class SingularBlockError(PreconditionError):
    pass


class UnknownVariableError(PreconditionError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class LimitError(SuperGeomError):
    """A degree or window cap was exceeded."""

    exit_code = 3


class ParseError(SuperGeomError):
    """Malformed session text; carries a 1-based line and column."""

    exit_code = 1

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self):
        return f"line {self.line}, column {self.column}: {self.message}"
