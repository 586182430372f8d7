"""Exception hierarchy.  Every error carries a machine-readable ``kind`` and ``details``."""

from __future__ import annotations


class LieCohomError(Exception):
    kind = "error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self) -> dict:
        return {"type": self.kind, "message": self.message, "details": self.details}


class InputError(LieCohomError, ValueError):
    kind = "input_error"


class UnorderedScalar(LieCohomError, ValueError):
    """Raised when a sign or order is requested of a t-dependent scalar."""

    kind = "unordered_scalar"


class JacobiViolation(InputError):
    kind = "jacobi_violation"


class NotASubalgebra(InputError):
    kind = "not_a_subalgebra"


class NotAnIdeal(InputError):
    kind = "not_an_ideal"


class DSquaredNonzero(LieCohomError):
    kind = "d_squared_nonzero"


class NotClosed(InputError):
    kind = "not_closed"
