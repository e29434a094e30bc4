"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` so the CLI can map
failures onto its exit-code contract (validation -> 2, guard/limit -> 3).
"""


class ShiftLabError(Exception):
    code = "ERROR"

    def __init__(self, message=""):
        super().__init__(message or self.code)


class ValidationError(ShiftLabError):
    """Bad input: malformed words, weights not summing to one, etc."""

    code = "INVALID_INPUT"

    def __init__(self, message="", code=None):
        if code is not None:
            self.code = code
        super().__init__(message)


class GuardError(ShiftLabError):
    """A documented resource guard was exceeded."""

    code = "LIMIT_EXCEEDED"

    def __init__(self, message="", code=None):
        if code is not None:
            self.code = code
        super().__init__(message)


class UndecidedError(ShiftLabError):
    """Membership query ran past the known digits of a truncated stream."""

    code = "UNDECIDED"


class PrecisionExhausted(GuardError):
    """An interval straddles an integer and refinement cannot separate it."""

    code = "PRECISION_EXHAUSTED"


class CertificateError(ShiftLabError):
    """An independently checked certificate violated a definitional inequality."""

    code = "CERTIFICATE_INVALID"
