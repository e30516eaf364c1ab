"""Runnable cross-check suites with structured pass/fail reports.

Three checks:

* lubrication identity — the 1D-NS closed forms at alpha = 4/3 must
  coincide with the lubrication-approximation formulas;
* straight-tube limit — each converging-diverging form must approach
  the Poiseuille value as r_max -> r_min (the sinusoidal form reduces
  to it exactly, verified symbolically);
* oracle agreement — adaptive quadrature of the flow-resistance
  integral must match every closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import QuadratureError
from .flow_models import (
    DEGENERATE_GAP,
    FluidProperties,
    MomentumModel,
    pressure_drop_lub,
    pressure_drop_ns,
)
from .geometry import CapillaryGeometry, TubeKind
from .oracle import QuadratureConfig, pressure_drop_quadrature


@dataclass
class CaseReport:
    inputs: dict
    value_a: float
    value_b: float
    relative_error: float
    note: str = ""


@dataclass
class ValidationReport:
    check_name: str
    tolerance: float
    passed: bool = True
    worst_case_relative_error: float = 0.0
    informational: bool = False
    cases: list[CaseReport] = field(default_factory=list)

    def add_case(self, inputs: dict, value_a: float, value_b: float, note: str = "") -> None:
        scale = max(abs(value_a), abs(value_b))
        err = abs(value_a - value_b) / scale if scale > 0 else 0.0
        self.cases.append(CaseReport(inputs, value_a, value_b, err, note))
        if err > self.worst_case_relative_error:
            self.worst_case_relative_error = err
        self.passed = self.worst_case_relative_error <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "passed": self.passed,
            "worst_case_relative_error": self.worst_case_relative_error,
            "tolerance": self.tolerance,
            "informational": self.informational,
            "cases": [
                {
                    "inputs": c.inputs,
                    "value_a": c.value_a,
                    "value_b": c.value_b,
                    "relative_error": c.relative_error,
                    **({"note": c.note} if c.note else {}),
                }
                for c in self.cases
            ],
        }


def _geom_inputs(geom: CapillaryGeometry, fluid: FluidProperties, q: float, **extra) -> dict:
    return {
        "kind": geom.kind.value,
        "r_min": geom.r_min,
        "r_max": geom.r_max,
        "length": geom.length,
        "mu": fluid.mu,
        "rho": fluid.rho,
        "q": q,
        **extra,
    }


def check_lubrication_identity(
    geoms: list[CapillaryGeometry],
    fluid: FluidProperties,
    q: float,
    alpha: float = 4.0 / 3.0,
    tolerance: float = 1e-12,
) -> ValidationReport:
    """Compare pressure_drop_ns at the given alpha against the lubrication
    formulas.  Exact agreement only holds at alpha = 4/3; for any other
    alpha the report is marked informational and records the deviation."""
    report = ValidationReport("lubrication_identity", tolerance)
    report.informational = abs(alpha - 4.0 / 3.0) > 1e-15
    model = MomentumModel(alpha=alpha)
    for geom in geoms:
        p_ns = pressure_drop_ns(geom, fluid, model, q)
        p_lub = pressure_drop_lub(geom, fluid, q)
        report.add_case(_geom_inputs(geom, fluid, q, alpha=alpha), p_ns, p_lub)
    return report


def sinusoidal_reduces_to_poiseuille() -> bool:
    """Symbolically substitute r_max = r_min = R into the sinusoidal
    closed form and verify it equals kappa*rho*Q*L / (pi^2 R^4)."""
    import sympy as sp

    R, L, C = sp.symbols("R L C", positive=True)  # C stands for kappa*rho*Q
    rmax, rmin = sp.symbols("rmax rmin", positive=True)
    s = rmax + rmin
    d = rmax - rmin
    p_sin = C * L * (2 * s ** 3 + 3 * s * d ** 2) / (16 * sp.pi ** 2 * (rmax * rmin) ** sp.Rational(7, 2))
    substituted = p_sin.subs({rmax: R, rmin: R})
    poiseuille = C * L / (sp.pi ** 2 * R ** 4)
    return sp.simplify(substituted - poiseuille) == 0


def check_straight_limit(
    kind: TubeKind,
    r: float,
    length: float,
    fluid: FluidProperties,
    model: MomentumModel,
    q: float,
    delta_list: list[float],
    tolerance: float = 1e-3,
    limit_delta: float = 1e-4,
) -> ValidationReport:
    """Ratio of the converging-diverging drop (r_min = r, r_max = r(1+d))
    to the straight-tube drop at radius r, over decreasing d.  Passes iff
    |ratio - 1| shrinks monotonically as d decreases and is within
    tolerance at d = limit_delta.  Deltas below the degenerate guard are
    skipped with a note.  For the sinusoidal kind the exact d = 0
    reduction is verified symbolically and recorded as an extra case."""
    report = ValidationReport(f"straight_limit_{kind.value}", tolerance)
    straight = CapillaryGeometry.straight(r, length)
    p_straight = pressure_drop_ns(straight, fluid, model, q)

    deltas = sorted(delta_list, reverse=True)
    deviations = []
    for d in deltas:
        if d < DEGENERATE_GAP:
            report.cases.append(
                CaseReport({"delta": d}, math.nan, math.nan, 0.0, "skipped: below degenerate guard")
            )
            continue
        geom = CapillaryGeometry(kind, r, r * (1.0 + d), length)
        p_cd = pressure_drop_ns(geom, fluid, model, q)
        ratio = p_cd / p_straight
        deviations.append((d, abs(ratio - 1.0)))
        report.cases.append(
            CaseReport(
                _geom_inputs(geom, fluid, q, delta=d),
                p_cd,
                p_straight,
                abs(ratio - 1.0),
                note=f"ratio={ratio!r}",
            )
        )
    monotone = all(b[1] <= a[1] for a, b in zip(deviations, deviations[1:]))
    at_limit = next((dev for d, dev in deviations if d == limit_delta), None)
    worst = at_limit if at_limit is not None else (deviations[-1][1] if deviations else math.inf)
    if not monotone:
        # passed must remain a pure function of worst vs tolerance
        worst = math.inf

    if kind is TubeKind.SINUSOIDAL:
        exact = sinusoidal_reduces_to_poiseuille()
        report.cases.append(
            CaseReport(
                {"delta": 0.0},
                p_straight,
                p_straight,
                0.0 if exact else math.inf,
                note="symbolic substitution r_max = r_min",
            )
        )
        if not exact:
            worst = math.inf

    report.worst_case_relative_error = worst
    report.passed = worst <= tolerance
    return report


def check_oracle_agreement(
    geoms: list[CapillaryGeometry],
    fluid: FluidProperties,
    model: MomentumModel,
    q: float,
    cfg: QuadratureConfig = QuadratureConfig(),
    tolerance: float = 1e-8,
) -> ValidationReport:
    """Adaptive quadrature against the closed form, per geometry."""
    report = ValidationReport("oracle_agreement", tolerance)
    for geom in geoms:
        p_closed = pressure_drop_ns(geom, fluid, model, q)
        try:
            p_quad = pressure_drop_quadrature(geom, fluid, model, q, cfg)
        except QuadratureError as exc:
            report.cases.append(
                CaseReport(
                    _geom_inputs(geom, fluid, q),
                    p_closed,
                    exc.estimate,
                    math.inf,
                    note=f"quadrature failure: {exc}",
                )
            )
            report.worst_case_relative_error = math.inf
            report.passed = False
            continue
        report.add_case(_geom_inputs(geom, fluid, q), p_closed, p_quad)
    return report
