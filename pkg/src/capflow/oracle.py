"""Independent numerical checks of the closed-form pressure drops.

Two routes, deliberately exercising different machinery than the closed
forms:

* adaptive Simpson quadrature of p = 2*kappa*rho*Q * integral over
  [0, L/2] of dx / (pi^2 r(x)^4), using the profile's evenness about
  x = 0;
* an element discretization that chops [-L/2, L/2] into equal segments,
  treats each as a short straight tube at an averaged radius, and sums
  the per-element drops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputError, NegativeFlowError, QuadratureError
from .flow_models import FluidProperties, MomentumModel, kappa, pressure_drop_ns
from .geometry import CapillaryGeometry, radius_at


@dataclass(frozen=True)
class QuadratureConfig:
    relative_tolerance: float = 1e-10
    max_depth: int = 60

    def __post_init__(self):
        if not (0.0 < self.relative_tolerance < 1e-3):
            raise InvalidInputError("relative_tolerance must lie in (0, 1e-3)")
        if self.max_depth < 10:
            raise InvalidInputError("max_depth must be >= 10")


@dataclass(frozen=True)
class ConvergenceRecord:
    """One point of a numeric-to-analytic convergence curve."""

    n_elements: int
    p_numeric: float
    ratio: float


def _adaptive_simpson(f, a: float, b: float, rel_tol: float, max_depth: int):
    """Adaptive Simpson with interval bisection and Richardson error
    estimate.  Returns (integral, error_bound); raises QuadratureError
    (carrying the best estimate) if any segment hits max_depth without
    meeting its share of the tolerance budget."""
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    # Absolute budget from a coarse pass; the integrand is positive and
    # smooth for every supported profile, so this scale is reliable.
    abs_tol = rel_tol * abs(whole)
    if abs_tol == 0.0:
        return 0.0, 0.0

    total = 0.0
    total_err = 0.0
    failed = False
    # stack entries: (a, fa, m, fm, b, fb, simpson(a,b), budget, depth)
    stack = [(a, fa, m, fm, b, fb, whole, abs_tol, 0)]
    while stack:
        a0, fa0, m0, fm0, b0, fb0, s0, tol0, depth = stack.pop()
        lm = 0.5 * (a0 + m0)
        rm = 0.5 * (m0 + b0)
        flm, frm = f(lm), f(rm)
        left = (m0 - a0) / 6.0 * (fa0 + 4.0 * flm + fm0)
        right = (b0 - m0) / 6.0 * (fm0 + 4.0 * frm + fb0)
        delta = left + right - s0
        if abs(delta) <= 15.0 * tol0:
            total += left + right + delta / 15.0
            total_err += abs(delta) / 15.0
        elif depth >= max_depth:
            total += left + right + delta / 15.0
            total_err += abs(delta) / 15.0
            failed = True
        else:
            stack.append((a0, fa0, lm, flm, m0, fm0, left, 0.5 * tol0, depth + 1))
            stack.append((m0, fm0, rm, frm, b0, fb0, right, 0.5 * tol0, depth + 1))
    if failed:
        raise QuadratureError(
            f"adaptive quadrature did not converge within depth {max_depth}",
            estimate=total,
            error_bound=total_err,
        )
    return total, total_err


def pressure_drop_quadrature(
    geom: CapillaryGeometry,
    fluid: FluidProperties,
    model: MomentumModel,
    q: float,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> float:
    """Pressure drop via adaptive quadrature of dx/A^2 over [0, L/2]."""
    if q < 0:
        raise NegativeFlowError("q must be >= 0 (flow in positive x)")
    pi2 = math.pi ** 2

    def integrand(x: float) -> float:
        r = radius_at(geom, x)
        return 1.0 / (pi2 * r ** 4)

    integral, _ = _adaptive_simpson(
        integrand, 0.0, geom.half_length, cfg.relative_tolerance, cfg.max_depth
    )
    return 2.0 * kappa(model, fluid) * fluid.rho * q * integral


def pressure_drop_discretized(
    geom: CapillaryGeometry,
    fluid: FluidProperties,
    model: MomentumModel,
    q: float,
    n_elements: int,
    averaging: str = "endpoint",
) -> float:
    """Sum of short-straight-tube drops over n equal elements.

    Each element of width dx contributes kappa*rho*Q*dx / (pi^2 rbar^4)
    with rbar either the mean of the element's endpoint radii
    (averaging="endpoint", the default) or the radius at its midpoint
    (averaging="midpoint", for sensitivity checks).
    """
    if n_elements < 1:
        raise InvalidInputError("n_elements must be >= 1")
    if q < 0:
        raise NegativeFlowError("q must be >= 0 (flow in positive x)")
    if averaging not in ("endpoint", "midpoint"):
        raise InvalidInputError(f"unknown averaging {averaging!r}")

    half = geom.half_length
    dx = geom.length / n_elements
    krq = kappa(model, fluid) * fluid.rho * q
    pi2 = math.pi ** 2

    total = 0.0
    r_prev = radius_at(geom, -half)
    for i in range(n_elements):
        x_next = -half + (i + 1) * dx if i + 1 < n_elements else half
        r_next = radius_at(geom, x_next)
        if averaging == "endpoint":
            rbar = 0.5 * (r_prev + r_next)
        else:
            rbar = radius_at(geom, -half + (i + 0.5) * dx)
        total += krq * dx / (pi2 * rbar ** 4)
        r_prev = r_next
    return total


def convergence_series(
    geom: CapillaryGeometry,
    fluid: FluidProperties,
    model: MomentumModel,
    q: float,
    n_list: list[int],
    averaging: str = "endpoint",
) -> list[ConvergenceRecord]:
    """Discretized drop and its ratio to the closed form, per element count."""
    if q <= 0:
        raise InvalidInputError("q must be > 0 for a convergence series")
    p_analytic = pressure_drop_ns(geom, fluid, model, q)
    out = []
    for n in n_list:
        p_num = pressure_drop_discretized(geom, fluid, model, q, n, averaging)
        out.append(ConvergenceRecord(n, p_num, p_num / p_analytic))
    return out
