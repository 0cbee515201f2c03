"""Exception types shared across the package."""


class GradeliftError(Exception):
    """Base class; ``kind`` is the machine-readable tag printed by the CLI."""

    kind = "error"


class ZeroPolynomialError(GradeliftError, ValueError):
    kind = "zero-polynomial"


class ZeroRelationError(GradeliftError, ValueError):
    kind = "zero-relation"


class DegreeBoundTooSmall(GradeliftError, ValueError):
    kind = "degree-bound-too-small"


class NotNormalError(GradeliftError, ValueError):
    kind = "not-normal"


class PresentationSyntaxError(GradeliftError, ValueError):
    kind = "syntax"

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class UnknownGenerator(PresentationSyntaxError):
    kind = "unknown-generator"


class DuplicateGenerator(PresentationSyntaxError):
    kind = "duplicate-generator"
