"""Exception types shared across the package."""


class BssError(Exception):
    """Base class for all package errors."""


class FieldMismatchError(BssError):
    """Raised when two values from incompatible number fields are combined."""


class PoleError(BssError):
    """Raised on exact division by zero in a field or at a rational-function pole."""


class DslSyntaxError(BssError):
    """Raised by the program parser; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ProgramError(BssError):
    """Raised when a program violates structural invariants (labels, ranges, params)."""


class CertificateError(BssError):
    """Raised when certificate preconditions fail or no radius can be certified."""
