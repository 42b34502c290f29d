"""Exception types shared across the package."""


class TraboundError(Exception):
    """Base class for all package errors."""


class DomainError(TraboundError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigurationError(TraboundError, ValueError):
    """A solver configuration is internally inconsistent."""


class NoBoundStatesError(DomainError):
    """The basis capacity is non-positive: no representable bound states."""


class BranchPointError(DomainError):
    """Energy sits on a branch point of the polynomial-argument map."""


class NotPositiveDefiniteError(TraboundError):
    """Overlap matrix failed its Cholesky factorization.

    ``minor`` is the 1-based order of the leading minor that is not
    positive definite, as reported by the factorization.
    """

    def __init__(self, minor: int):
        self.minor = minor
        super().__init__(f"matrix is not positive definite: leading minor of order {minor}")


class QuadratureError(TraboundError):
    """Adaptive quadrature failed to converge to the requested tolerance."""
