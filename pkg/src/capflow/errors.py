"""Exception hierarchy shared by all capflow modules."""


class CapflowError(Exception):
    """Base class for all capflow errors."""


class InvalidInputError(CapflowError, ValueError):
    """An argument violates a domain-type invariant."""


class DomainError(InvalidInputError):
    """An axial coordinate or function argument lies outside its domain."""


class UnsupportedKindError(InvalidInputError):
    """Operation is not defined for this tube kind."""


class DegenerateShapeError(CapflowError, ValueError):
    """A converging-diverging formula was requested with r_max equal to
    (or indistinguishably close to) r_min.  Callers should construct a
    straight tube instead."""


class InvalidMomentumModelError(InvalidInputError):
    """Momentum correction factor outside the accepted range (1, 2]."""


class NegativeFlowError(InvalidInputError):
    """Flow rate or pressure drop in the negative-x direction; the
    derivation assumes flow in positive x."""


class QuadratureError(CapflowError):
    """Adaptive quadrature failed to reach the requested tolerance.

    Carries the best available estimate and its error bound.
    """

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
