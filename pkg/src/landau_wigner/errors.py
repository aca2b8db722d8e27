"""Exception hierarchy shared by all modules.

Every error raised on purpose by the library derives from
:class:`LandauWignerError`, so callers (notably the command-line front end)
can separate library failures from programming errors.
"""

from __future__ import annotations


class LandauWignerError(Exception):
    """Base class for all library errors."""


class DomainError(LandauWignerError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole (e.g. ``zeta(1, a)``)."""


class ConstructionError(LandauWignerError, ValueError):
    """A requested state does not exist (e.g. missing ground-state degeneracy)."""


class PreconditionError(LandauWignerError, ValueError):
    """An input violates a documented precondition (e.g. impure state)."""


class UnavailableResult(LandauWignerError):
    """The requested quantity cannot be computed from the information available."""


class InternalConsistencyError(LandauWignerError, ArithmeticError):
    """A computed object violates an invariant it is guaranteed to satisfy."""


class NumericalFailure(LandauWignerError, ArithmeticError):
    """A numerical procedure did not reach its tolerance.

    Parameters
    ----------
    message : str
        Human readable description.
    estimate : float, optional
        Best estimate available when the procedure stopped.
    error_bound : float, optional
        Error (or tail) bound attached to ``estimate``.
    """

    def __init__(self, message: str, estimate: float | None = None,
                 error_bound: float | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
