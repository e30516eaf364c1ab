"""Axisymmetric capillary profiles.

Six tube kinds: five converging-diverging profiles (narrowest at the
midpoint x = 0, widest at the ends x = +-L/2) plus the straight tube.
All profiles are even functions of x on [-L/2, L/2].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateShapeError, DomainError, InvalidInputError, UnsupportedKindError


class TubeKind(str, Enum):
    CONICAL = "conical"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"
    HYPERBOLIC_COSINE = "hyperbolic-cosine"
    SINUSOIDAL = "sinusoidal"
    STRAIGHT = "straight"


CONVERGING_DIVERGING_KINDS = (
    TubeKind.CONICAL,
    TubeKind.PARABOLIC,
    TubeKind.HYPERBOLIC,
    TubeKind.HYPERBOLIC_COSINE,
    TubeKind.SINUSOIDAL,
)


@dataclass(frozen=True)
class CapillaryGeometry:
    """A tube shape with minimum radius, maximum radius and length (SI, m).

    Straight tubes carry r_min == r_max == R.
    """

    kind: TubeKind
    r_min: float
    r_max: float
    length: float

    def __post_init__(self):
        if not (self.r_min > 0 and math.isfinite(self.r_min)):
            raise InvalidInputError("r_min must be positive and finite")
        if not (self.r_max > 0 and math.isfinite(self.r_max)):
            raise InvalidInputError("r_max must be positive and finite")
        if self.r_min > self.r_max:
            raise InvalidInputError("r_min must not exceed r_max")
        if not (self.length > 0 and math.isfinite(self.length)):
            raise InvalidInputError("length must be positive and finite")
        if self.kind is TubeKind.STRAIGHT and self.r_min != self.r_max:
            raise InvalidInputError("straight tube requires r_min == r_max")

    @classmethod
    def straight(cls, radius: float, length: float) -> "CapillaryGeometry":
        return cls(TubeKind.STRAIGHT, radius, radius, length)

    @property
    def half_length(self) -> float:
        return self.length / 2.0


@dataclass(frozen=True)
class ShapeParameters:
    """Kind-specific profile coefficients.

    ``a`` and ``b`` follow each profile's defining equation, so their
    dimensions vary with kind (a is a length except for the hyperbolic
    tube where it is a length squared).  ``k`` (wavenumber) and ``cap_b``
    (dimensionless, < -1) are populated for the sinusoidal kind only.
    """

    a: float
    b: float
    k: float | None = None
    cap_b: float | None = None


def _arccosh(z: float) -> float:
    # ln(z + sqrt(z^2 - 1)); exact at z = 1, rejects z < 1.
    if z < 1.0:
        raise DomainError(f"arccosh domain requires z >= 1, got {z}")
    return math.log(z + math.sqrt(z * z - 1.0))


def shape_parameters(geom: CapillaryGeometry) -> ShapeParameters:
    """Profile coefficients (a, b[, k, B]) for a converging-diverging tube.

    Raises UnsupportedKindError for straight tubes and
    DegenerateShapeError when r_min == r_max (several coefficients
    vanish or are undefined there).
    """
    if geom.kind is TubeKind.STRAIGHT:
        raise UnsupportedKindError("straight tubes have no shape parameters")
    if geom.r_max == geom.r_min:
        raise DegenerateShapeError(
            "r_max == r_min: converging-diverging coefficients are degenerate; "
            "use kind=straight"
        )
    rmin, rmax, L = geom.r_min, geom.r_max, geom.length
    if geom.kind is TubeKind.CONICAL:
        return ShapeParameters(a=rmin, b=2.0 * (rmax - rmin) / L)
    if geom.kind is TubeKind.PARABOLIC:
        return ShapeParameters(a=rmin, b=(2.0 / L) ** 2 * (rmax - rmin))
    if geom.kind is TubeKind.HYPERBOLIC:
        return ShapeParameters(a=rmin * rmin, b=(2.0 / L) ** 2 * (rmax * rmax - rmin * rmin))
    if geom.kind is TubeKind.HYPERBOLIC_COSINE:
        return ShapeParameters(a=rmin, b=(2.0 / L) * _arccosh(rmax / rmin))
    if geom.kind is TubeKind.SINUSOIDAL:
        return ShapeParameters(
            a=(rmax + rmin) / 2.0,
            b=(rmax - rmin) / 2.0,
            k=2.0 * math.pi / L,
            cap_b=(rmax + rmin) / (rmin - rmax),
        )
    raise UnsupportedKindError(f"unknown kind {geom.kind!r}")


def radius_at(geom: CapillaryGeometry, x: float) -> float:
    """Tube radius r(x) for x in the closed interval [-L/2, L/2]."""
    half = geom.half_length
    if not (-half <= x <= half):
        raise DomainError(f"x = {x} outside [-{half}, {half}]")
    if geom.kind is TubeKind.STRAIGHT:
        return geom.r_min
    sp = shape_parameters(geom)
    if geom.kind is TubeKind.CONICAL:
        return sp.a + sp.b * abs(x)
    if geom.kind is TubeKind.PARABOLIC:
        return sp.a + sp.b * x * x
    if geom.kind is TubeKind.HYPERBOLIC:
        return math.sqrt(sp.a + sp.b * x * x)
    if geom.kind is TubeKind.HYPERBOLIC_COSINE:
        return sp.a * math.cosh(sp.b * x)
    # sinusoidal: one full wavelength over L
    return sp.a - sp.b * math.cos(sp.k * x)


def area_at(geom: CapillaryGeometry, x: float) -> float:
    """Cross-sectional area pi * r(x)^2."""
    r = radius_at(geom, x)
    return math.pi * r * r
