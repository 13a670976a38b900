"""Exception types shared across the package."""


class MatroidError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MatroidError, ValueError):
    """Bad argument: unknown element label, violated precondition, bad params."""


class ResourceLimitError(MatroidError, RuntimeError):
    """An enumeration bound was exceeded; the operation refuses to guess."""


class CheckTimeout(MatroidError, RuntimeError):
    """A cooperative deadline expired inside a long-running check."""


class ParseError(MatroidError, ValueError):
    """Syntax or semantic error in a text input, with position information."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        if self.col is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, col {self.col}: {self.message}"
