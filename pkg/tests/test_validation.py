import math

import pytest

from capflow import (
    CONVERGING_DIVERGING_KINDS,
    CapillaryGeometry,
    FluidProperties,
    MomentumModel,
    QuadratureConfig,
    TubeKind,
    check_lubrication_identity,
    check_oracle_agreement,
    check_straight_limit,
    pressure_drop_ns,
    sinusoidal_reduces_to_poiseuille,
)
from capflow.fixtures import canonical_geometries, random_cases

UNIT_FLUID = FluidProperties(mu=1.0, rho=1.0)
PARABOLIC_PROFILE = MomentumModel()


def five_kinds(rmin=1.0, rmax=2.0, length=1.0):
    return [CapillaryGeometry(k, rmin, rmax, length) for k in CONVERGING_DIVERGING_KINDS]


class TestLubricationIdentity:
    def test_five_kinds_pass(self):
        report = check_lubrication_identity(five_kinds(), UNIT_FLUID, 1.0)
        assert report.passed
        assert not report.informational
        assert report.worst_case_relative_error <= 1e-12

    def test_straight_passes(self):
        report = check_lubrication_identity(
            [CapillaryGeometry.straight(1.0, 1.0)], UNIT_FLUID, 1.0
        )
        assert report.passed

    def test_alpha_two_reports_half_ratio(self):
        report = check_lubrication_identity(five_kinds(), UNIT_FLUID, 1.0, alpha=2.0)
        assert report.informational
        assert not report.passed
        # NS at alpha=2 is exactly half the lubrication value
        for case in report.cases:
            assert case.relative_error == pytest.approx(0.5, abs=1e-14)

    def test_randomized_draws(self):
        for case in random_cases(200, alpha=4.0 / 3.0, seed=11):
            report = check_lubrication_identity([case.geom], case.fluid, case.q)
            assert report.passed

    def test_passed_recomputable_from_cases(self):
        report = check_lubrication_identity(five_kinds(), UNIT_FLUID, 1.0)
        worst = max(c.relative_error for c in report.cases)
        assert report.worst_case_relative_error == worst
        assert report.passed == (worst <= report.tolerance)


class TestStraightLimit:
    DELTAS = [1e-1, 1e-2, 1e-3, 1e-4]

    @pytest.mark.parametrize("kind", CONVERGING_DIVERGING_KINDS)
    def test_all_kinds_converge(self, kind):
        report = check_straight_limit(
            kind, 1.0, 1.0, UNIT_FLUID, PARABOLIC_PROFILE, 1.0, self.DELTAS
        )
        assert report.passed
        assert report.worst_case_relative_error <= 1e-3

    def test_sinusoidal_symbolic_case_recorded(self):
        report = check_straight_limit(
            TubeKind.SINUSOIDAL, 1.0, 1.0, UNIT_FLUID, PARABOLIC_PROFILE, 1.0, self.DELTAS
        )
        symbolic = [c for c in report.cases if "symbolic" in c.note]
        assert len(symbolic) == 1
        assert symbolic[0].relative_error == 0.0

    def test_symbolic_reduction_holds(self):
        assert sinusoidal_reduces_to_poiseuille()

    def test_wide_gap_discriminates(self):
        # delta = 1: the check must see a ratio far from 1
        straight = CapillaryGeometry.straight(1.0, 1.0)
        p_s = pressure_drop_ns(straight, UNIT_FLUID, PARABOLIC_PROFILE, 1.0)
        g = CapillaryGeometry(TubeKind.CONICAL, 1.0, 2.0, 1.0)
        p_cd = pressure_drop_ns(g, UNIT_FLUID, PARABOLIC_PROFILE, 1.0)
        ratio = p_cd / p_s
        assert abs(ratio - 1.0) > 0.1
        # bracketed by the straight tubes at r_max and r_min
        p_wide = pressure_drop_ns(CapillaryGeometry.straight(2.0, 1.0),
                                  UNIT_FLUID, PARABOLIC_PROFILE, 1.0)
        assert p_wide < p_cd < p_s

    def test_below_guard_skipped(self):
        report = check_straight_limit(
            TubeKind.CONICAL, 1.0, 1.0, UNIT_FLUID, PARABOLIC_PROFILE, 1.0,
            [1e-2, 1e-4, 1e-12],
        )
        skipped = [c for c in report.cases if "skipped" in c.note]
        assert len(skipped) == 1
        assert report.passed  # remaining deltas still satisfy the check

    def test_monotone_over_decade_range(self):
        deltas = [10.0 ** e for e in range(-4, 0)]
        for kind in CONVERGING_DIVERGING_KINDS:
            report = check_straight_limit(
                kind, 1.0, 1.0, UNIT_FLUID, PARABOLIC_PROFILE, 1.0, deltas
            )
            devs = [abs(float(c.note.split("=")[1]) - 1.0)
                    for c in report.cases if c.note.startswith("ratio=")]
            assert devs == sorted(devs, reverse=True)


class TestOracleAgreement:
    def test_canonical_fixture_passes(self):
        from capflow.fixtures import CANONICAL_FLUID, CANONICAL_MODEL, CANONICAL_Q

        report = check_oracle_agreement(
            canonical_geometries(include_straight=True),
            CANONICAL_FLUID, CANONICAL_MODEL, CANONICAL_Q,
        )
        assert report.passed
        assert report.worst_case_relative_error <= 1e-8

    def test_straight_near_machine_precision(self):
        report = check_oracle_agreement(
            [CapillaryGeometry.straight(1.0, 1.0)], UNIT_FLUID, PARABOLIC_PROFILE, 1.0
        )
        assert report.worst_case_relative_error <= 1e-14

    def test_coarse_tolerance_still_bounded(self):
        cfg = QuadratureConfig(relative_tolerance=1e-4)
        report = check_oracle_agreement(
            five_kinds(), UNIT_FLUID, PARABOLIC_PROFILE, 1.0, cfg, tolerance=1e-2
        )
        assert report.passed
        assert report.worst_case_relative_error <= 1e-2

    def test_quadrature_failure_fails_check(self):
        cfg = QuadratureConfig(relative_tolerance=1e-15, max_depth=10)
        report = check_oracle_agreement(
            five_kinds(), UNIT_FLUID, PARABOLIC_PROFILE, 1.0, cfg
        )
        assert not report.passed
        assert math.isinf(report.worst_case_relative_error)


class TestReportSerialization:
    def test_to_dict_schema(self):
        report = check_lubrication_identity(five_kinds(), UNIT_FLUID, 1.0)
        doc = report.to_dict()
        assert set(doc) >= {"check_name", "passed", "worst_case_relative_error", "cases"}
        for case in doc["cases"]:
            assert set(case) >= {"inputs", "value_a", "value_b", "relative_error"}
