import math

import pytest

from capflow import (
    CONVERGING_DIVERGING_KINDS,
    CapillaryGeometry,
    FluidProperties,
    InvalidInputError,
    MomentumModel,
    QuadratureConfig,
    QuadratureError,
    TubeKind,
    convergence_series,
    pressure_drop_discretized,
    pressure_drop_ns,
    pressure_drop_quadrature,
)
from capflow.fixtures import (
    CANONICAL_FLUID,
    CANONICAL_MODEL,
    CANONICAL_Q,
    canonical_geometry,
    random_cases,
)
from capflow.oracle import _adaptive_simpson

UNIT_FLUID = FluidProperties(mu=1.0, rho=1.0)
PARABOLIC_PROFILE = MomentumModel()


def unit_geom(kind):
    return CapillaryGeometry(kind, 1.0, 2.0, 1.0)


class TestConfig:
    def test_tolerance_bounds(self):
        with pytest.raises(InvalidInputError):
            QuadratureConfig(relative_tolerance=1e-3)
        with pytest.raises(InvalidInputError):
            QuadratureConfig(relative_tolerance=0.0)
        with pytest.raises(InvalidInputError):
            QuadratureConfig(max_depth=5)


class TestQuadrature:
    def test_straight_constant_integrand(self):
        g = CapillaryGeometry.straight(1.0, 1.0)
        p = pressure_drop_quadrature(g, UNIT_FLUID, PARABOLIC_PROFILE, 1.0)
        assert p == pytest.approx(8.0 / math.pi, rel=1e-10)

    def test_conical_matches_closed_form(self):
        g = unit_geom(TubeKind.CONICAL)
        p = pressure_drop_quadrature(g, UNIT_FLUID, PARABOLIC_PROFILE, 1.0)
        assert p == pytest.approx(7.0 / (3.0 * math.pi), rel=1e-8)

    @pytest.mark.parametrize("kind", CONVERGING_DIVERGING_KINDS)
    def test_canonical_cross_validation(self, kind):
        g = canonical_geometry(kind)
        closed = pressure_drop_ns(g, CANONICAL_FLUID, CANONICAL_MODEL, CANONICAL_Q)
        quad = pressure_drop_quadrature(g, CANONICAL_FLUID, CANONICAL_MODEL, CANONICAL_Q)
        assert abs(quad / closed - 1.0) <= 1e-8

    def test_randomized_cross_validation(self):
        cfg = QuadratureConfig(relative_tolerance=1e-10)
        for case in random_cases(50, seed=7):
            closed = pressure_drop_ns(case.geom, case.fluid, case.model, case.q)
            quad = pressure_drop_quadrature(case.geom, case.fluid, case.model, case.q, cfg)
            assert abs(quad / closed - 1.0) <= 1e-8

    def test_symmetry_reduction(self):
        # full-interval integral equals twice the half-interval one
        g = unit_geom(TubeKind.SINUSOIDAL)

        def integrand(x):
            from capflow import radius_at
            return 1.0 / (math.pi ** 2 * radius_at(g, x) ** 4)

        half, _ = _adaptive_simpson(integrand, 0.0, g.half_length, 1e-12, 60)
        full, _ = _adaptive_simpson(integrand, -g.half_length, g.half_length, 1e-12, 60)
        assert full == pytest.approx(2.0 * half, rel=1e-10)

    def test_nonconvergence_carries_estimate(self):
        cfg = QuadratureConfig(relative_tolerance=1e-15, max_depth=10)
        g = canonical_geometry(TubeKind.SINUSOIDAL)
        with pytest.raises(QuadratureError) as exc_info:
            pressure_drop_quadrature(g, CANONICAL_FLUID, CANONICAL_MODEL, CANONICAL_Q, cfg)
        err = exc_info.value
        assert err.estimate > 0
        assert err.error_bound > 0

    def test_positivity(self):
        for kind in CONVERGING_DIVERGING_KINDS:
            g = canonical_geometry(kind)
            assert pressure_drop_quadrature(g, CANONICAL_FLUID, CANONICAL_MODEL, 1e-9) > 0


class TestDiscretized:
    def test_single_element(self):
        # one element: both endpoint radii are r_max = 2, mean 2
        g = unit_geom(TubeKind.CONICAL)
        p = pressure_drop_discretized(g, UNIT_FLUID, PARABOLIC_PROFILE, 1.0, 1)
        assert p == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-14)

    def test_two_elements(self):
        # each element spans radii {2, 1}, mean 1.5:
        # p = 2 * 8*pi * 0.5 / (pi^2 * 1.5^4) = 8 / (pi * 5.0625)
        g = unit_geom(TubeKind.CONICAL)
        p = pressure_drop_discretized(g, UNIT_FLUID, PARABOLIC_PROFILE, 1.0, 2)
        assert p == pytest.approx(8.0 / (math.pi * 5.0625), rel=1e-14)

    def test_zero_elements_rejected(self):
        g = unit_geom(TubeKind.CONICAL)
        with pytest.raises(InvalidInputError):
            pressure_drop_discretized(g, UNIT_FLUID, PARABOLIC_PROFILE, 1.0, 0)

    @pytest.mark.parametrize("averaging", ["endpoint", "midpoint"])
    def test_converges_to_closed_form(self, averaging):
        for kind in CONVERGING_DIVERGING_KINDS:
            g = canonical_geometry(kind)
            closed = pressure_drop_ns(g, CANONICAL_FLUID, CANONICAL_MODEL, CANONICAL_Q)
            p200 = pressure_drop_discretized(
                g, CANONICAL_FLUID, CANONICAL_MODEL, CANONICAL_Q, 200, averaging
            )
            assert abs(p200 / closed - 1.0) <= 2e-3

    def test_unknown_averaging_rejected(self):
        g = unit_geom(TubeKind.CONICAL)
        with pytest.raises(InvalidInputError):
            pressure_drop_discretized(g, UNIT_FLUID, PARABOLIC_PROFILE, 1.0, 4, "simpson")

    def test_positivity(self):
        for kind in CONVERGING_DIVERGING_KINDS:
            g = canonical_geometry(kind)
            assert pressure_drop_discretized(g, CANONICAL_FLUID, CANONICAL_MODEL, 1e-9, 7) > 0


class TestConvergenceSeries:
    def test_conical_trend(self):
        g = unit_geom(TubeKind.CONICAL)
        records = convergence_series(g, UNIT_FLUID, PARABOLIC_PROFILE, 1.0, [1, 2, 5, 10, 50])
        assert [r.n_elements for r in records] == [1, 2, 5, 10, 50]
        assert abs(records[-1].ratio - 1.0) < 1e-2

    def test_straight_exact(self):
        g = CapillaryGeometry.straight(1.0, 1.0)
        for rec in convergence_series(g, UNIT_FLUID, PARABOLIC_PROFILE, 1.0, [1, 3, 17]):
            assert rec.ratio == pytest.approx(1.0, rel=1e-14)

    def test_sinusoidal_refinement(self):
        g = canonical_geometry(TubeKind.SINUSOIDAL)
        records = convergence_series(g, CANONICAL_FLUID, CANONICAL_MODEL, CANONICAL_Q, [10, 50])
        assert abs(records[1].ratio - 1.0) < abs(records[0].ratio - 1.0)

    def test_requires_positive_flow(self):
        g = unit_geom(TubeKind.CONICAL)
        with pytest.raises(InvalidInputError):
            convergence_series(g, UNIT_FLUID, PARABOLIC_PROFILE, 0.0, [1])
