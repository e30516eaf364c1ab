"""Closed-form pressure-drop relations.

Two model families, both linear in the volumetric flow rate Q:

* the steady 1D Navier-Stokes reduction, p = kappa*rho*Q * F(geometry),
  where kappa = 2*pi*alpha*mu / (rho*(alpha - 1)) lumps wall friction
  and alpha is the momentum-flux correction factor;
* the lubrication approximation, which treats each axial station as
  locally Poiseuille and coincides with the 1D-NS forms at alpha = 4/3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DegenerateShapeError,
    InvalidInputError,
    InvalidMomentumModelError,
    NegativeFlowError,
)
from .geometry import CapillaryGeometry, TubeKind, _arccosh

# Parabolic velocity profile (Poiseuille flow).
DEFAULT_ALPHA = 4.0 / 3.0

# Relative radius gap below which the converging-diverging closed forms
# suffer catastrophic cancellation; callers should use a straight tube.
DEGENERATE_GAP = 1e-9


class ModelTag(str, Enum):
    NAVIER_STOKES_1D = "navier-stokes"
    LUBRICATION = "lubrication"


@dataclass(frozen=True)
class FluidProperties:
    """Dynamic viscosity mu (Pa.s) and mass density rho (kg/m^3)."""

    mu: float
    rho: float

    def __post_init__(self):
        if not (self.mu > 0 and math.isfinite(self.mu)):
            raise InvalidInputError("mu must be positive and finite")
        if not (self.rho > 0 and math.isfinite(self.rho)):
            raise InvalidInputError("rho must be positive and finite")


@dataclass(frozen=True)
class MomentumModel:
    """Momentum-flux correction factor alpha.

    Accepted range (1, 2]: alpha = 4/3 is the parabolic profile; the
    plug-flow limit alpha -> 1 makes the friction coefficient singular
    and is rejected.
    """

    alpha: float = DEFAULT_ALPHA

    def __post_init__(self):
        if not (1.0 < self.alpha <= 2.0):
            raise InvalidMomentumModelError(
                f"alpha must lie in (1, 2], got {self.alpha}"
            )


@dataclass(frozen=True)
class FlowSolution:
    """A matched pressure-drop / flow-rate pair for one geometry."""

    pressure_drop: float
    flow_rate: float
    model_tag: ModelTag


def kappa(model: MomentumModel, fluid: FluidProperties) -> float:
    """Viscosity friction coefficient 2*pi*alpha*mu / (rho*(alpha-1)), m^2/s."""
    a = model.alpha
    return 2.0 * math.pi * a * fluid.mu / (fluid.rho * (a - 1.0))


def _require_nondegenerate(geom: CapillaryGeometry) -> None:
    if geom.kind is TubeKind.STRAIGHT:
        return
    if (geom.r_max - geom.r_min) / geom.r_min < DEGENERATE_GAP:
        raise DegenerateShapeError(
            "r_max - r_min below the degenerate-gap threshold; "
            "construct kind=straight instead"
        )


# ---------------------------------------------------------------------------
# Geometric resistance factors F(geom) = integral over the tube of dx/A^2,
# so p = kappa*rho*Q * F for the 1D-NS model.
# ---------------------------------------------------------------------------

def _factor_straight(r: float, L: float) -> float:
    return L / (math.pi ** 2 * r ** 4)


def _factor_conical(rmin: float, rmax: float, L: float) -> float:
    return L / (3.0 * math.pi ** 2 * (rmax - rmin)) * (1.0 / rmin ** 3 - 1.0 / rmax ** 3)


def _factor_parabolic(rmin: float, rmax: float, L: float) -> float:
    bracket = (
        1.0 / (3.0 * rmin * rmax ** 3)
        + 5.0 / (12.0 * rmin ** 2 * rmax ** 2)
        + 5.0 / (8.0 * rmin ** 3 * rmax)
        + 5.0 * math.atan(math.sqrt((rmax - rmin) / rmin))
        / (8.0 * rmin ** 3.5 * math.sqrt(rmax - rmin))
    )
    return L / (2.0 * math.pi ** 2) * bracket


def _factor_hyperbolic(rmin: float, rmax: float, L: float) -> float:
    gap2 = rmax * rmax - rmin * rmin
    bracket = (
        1.0 / (rmin ** 2 * rmax ** 2)
        + math.atan(math.sqrt(gap2) / rmin) / (rmin ** 3 * math.sqrt(gap2))
    )
    return L / (2.0 * math.pi ** 2) * bracket


def _factor_hyperbolic_cosine(rmin: float, rmax: float, L: float) -> float:
    beta = _arccosh(rmax / rmin)
    sech = 1.0 / math.cosh(beta)
    return (
        L / (3.0 * math.pi ** 2)
        * math.tanh(beta) * (sech * sech + 2.0)
        / (rmin ** 4 * beta)
    )


def _factor_sinusoidal(rmin: float, rmax: float, L: float) -> float:
    # Well defined at rmax == rmin, where it reduces to the straight factor.
    s = rmax + rmin
    d = rmax - rmin
    return L * (2.0 * s ** 3 + 3.0 * s * d * d) / (16.0 * math.pi ** 2 * (rmax * rmin) ** 3.5)


_FACTORS = {
    TubeKind.CONICAL: _factor_conical,
    TubeKind.PARABOLIC: _factor_parabolic,
    TubeKind.HYPERBOLIC: _factor_hyperbolic,
    TubeKind.HYPERBOLIC_COSINE: _factor_hyperbolic_cosine,
    TubeKind.SINUSOIDAL: _factor_sinusoidal,
}


def geometric_factor(geom: CapillaryGeometry) -> float:
    """Closed-form value of the tube's flow-resistance integral (m^-3)."""
    _require_nondegenerate(geom)
    if geom.kind is TubeKind.STRAIGHT:
        return _factor_straight(geom.r_min, geom.length)
    return _FACTORS[geom.kind](geom.r_min, geom.r_max, geom.length)


def resistance_coefficient(
    geom: CapillaryGeometry, fluid: FluidProperties, model: MomentumModel
) -> float:
    """p/Q proportionality coefficient (Pa.s/m^3) of the 1D-NS model."""
    return kappa(model, fluid) * fluid.rho * geometric_factor(geom)


def pressure_drop_ns(
    geom: CapillaryGeometry,
    fluid: FluidProperties,
    model: MomentumModel,
    q: float,
) -> float:
    """1D Navier-Stokes pressure drop (Pa) for flow rate q >= 0 (m^3/s)."""
    if q < 0:
        raise NegativeFlowError("q must be >= 0 (flow in positive x)")
    return q * resistance_coefficient(geom, fluid, model)


# ---------------------------------------------------------------------------
# Lubrication-approximation forms (locally-Poiseuille).  Written out
# independently of the 1D-NS factors so the alpha = 4/3 identity is a
# genuine cross-check rather than a tautology.
# ---------------------------------------------------------------------------

def pressure_drop_lub(geom: CapillaryGeometry, fluid: FluidProperties, q: float) -> float:
    """Lubrication-approximation pressure drop (Pa) for flow rate q >= 0."""
    if q < 0:
        raise NegativeFlowError("q must be >= 0 (flow in positive x)")
    _require_nondegenerate(geom)
    rmin, rmax, L = geom.r_min, geom.r_max, geom.length
    mu = fluid.mu
    if geom.kind is TubeKind.STRAIGHT:
        return 8.0 * mu * L * q / (math.pi * rmin ** 4)
    if geom.kind is TubeKind.CONICAL:
        return (
            8.0 * L * q * mu / (3.0 * math.pi * (rmax - rmin))
            * (1.0 / rmin ** 3 - 1.0 / rmax ** 3)
        )
    if geom.kind is TubeKind.PARABOLIC:
        bracket = (
            1.0 / (3.0 * rmin * rmax ** 3)
            + 5.0 / (12.0 * rmin ** 2 * rmax ** 2)
            + 5.0 / (8.0 * rmin ** 3 * rmax)
            + 5.0 * math.atan(math.sqrt((rmax - rmin) / rmin))
            / (8.0 * rmin ** 3.5 * math.sqrt(rmax - rmin))
        )
        return 4.0 * L * q * mu / math.pi * bracket
    if geom.kind is TubeKind.HYPERBOLIC:
        gap2 = rmax * rmax - rmin * rmin
        bracket = (
            1.0 / (rmin ** 2 * rmax ** 2)
            + math.atan(math.sqrt(gap2) / rmin) / (rmin ** 3 * math.sqrt(gap2))
        )
        return 4.0 * L * q * mu / math.pi * bracket
    if geom.kind is TubeKind.HYPERBOLIC_COSINE:
        beta = _arccosh(rmax / rmin)
        sech = 1.0 / math.cosh(beta)
        return (
            8.0 * L * q * mu / (3.0 * math.pi * rmin ** 4)
            * math.tanh(beta) * (sech * sech + 2.0) / beta
        )
    # sinusoidal
    s = rmax + rmin
    d = rmax - rmin
    return L * q * mu * (2.0 * s ** 3 + 3.0 * s * d * d) / (2.0 * math.pi * (rmax * rmin) ** 3.5)


def pressure_drop(
    geom: CapillaryGeometry,
    fluid: FluidProperties,
    model: MomentumModel,
    q: float,
    tag: ModelTag = ModelTag.NAVIER_STOKES_1D,
) -> float:
    """Pressure drop under the selected model."""
    if tag is ModelTag.LUBRICATION:
        return pressure_drop_lub(geom, fluid, q)
    return pressure_drop_ns(geom, fluid, model, q)


def flow_rate_from_pressure(
    geom: CapillaryGeometry,
    fluid: FluidProperties,
    model: MomentumModel,
    p: float,
    tag: ModelTag = ModelTag.NAVIER_STOKES_1D,
) -> float:
    """Invert the linear p(Q) relation: Q = p / resistance."""
    if p < 0:
        raise NegativeFlowError("p must be >= 0 (flow in positive x)")
    if tag is ModelTag.LUBRICATION:
        return p / pressure_drop_lub(geom, fluid, 1.0)
    return p / resistance_coefficient(geom, fluid, model)


def solve(
    geom: CapillaryGeometry,
    fluid: FluidProperties,
    model: MomentumModel,
    q: float | None = None,
    p: float | None = None,
    tag: ModelTag = ModelTag.NAVIER_STOKES_1D,
) -> FlowSolution:
    """Match the missing half of a (p, Q) pair; exactly one of q/p given."""
    if (q is None) == (p is None):
        raise InvalidInputError("exactly one of q and p must be provided")
    if q is not None:
        return FlowSolution(pressure_drop(geom, fluid, model, q, tag), q, tag)
    return FlowSolution(p, flow_rate_from_pressure(geom, fluid, model, p, tag), tag)
