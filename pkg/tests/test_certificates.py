"""Certificate suites: frozen oracle values, must-fail instances,
quadrature refinement, and fault injection."""

import json
import shutil
from fractions import Fraction

import pytest
from mpmath import inf, mp, mpf, quad

from p1cert import certificates as C
from p1cert import data, inner
from p1cert.numerics import Interval, truncation_window


@pytest.fixture(autouse=True)
def clear_cache():
    data.clear_cache()
    yield
    data.clear_cache()


@pytest.fixture(scope="module")
def all_reports():
    data.clear_cache()
    reports, statement = C.run_all()
    return {r.name: r for r in reports}, statement


def _by_name(report):
    return {c.name: c for c in report.checks}


# ---------------------------------------------------------------------------
# Ray certificate
# ---------------------------------------------------------------------------

class TestRayCertificate:
    def test_unit_instance_exact_values(self):
        report = C.check_omega_I(1, Fraction(3, 20))
        assert report.verdict
        checks = _by_name(report)
        expected_map = (Fraction(23, 20) / 14
                        + Fraction(23, 20) ** 2 * Fraction(784, 3125) / 9)
        expected_contraction = (Fraction(1, 14)
                                + 2 * Fraction(23, 20)
                                * Fraction(784, 3125) / 9)
        assert checks["ray_ball_maps_into_itself"].value == expected_map
        assert checks["ray_contraction_below_one"].value \
            == expected_contraction
        assert abs(float(expected_map) - 0.1190082794) < 1e-9
        assert abs(float(expected_contraction) - 0.1355423492) < 1e-9

    def test_matching_instance(self):
        report = C.check_omega_I(C.x0_abs(), Fraction(1, 40))
        assert report.verdict
        checks = _by_name(report)
        assert abs(float(checks["ray_ball_maps_into_itself"].value)
                   - 0.0237795270) < 1e-9
        assert abs(float(checks["ray_contraction_below_one"].value)
                   - 0.0256180018) < 1e-9

    def test_too_small_ball_fails_by_name(self):
        report = C.check_omega_I(1, Fraction(1, 1000))
        assert not report.verdict
        failing = [c.name for c in report.failures()]
        assert failing == ["ray_ball_maps_into_itself"]
        value = _by_name(report)["ray_ball_maps_into_itself"].value
        assert abs(float(value) - 0.0994313345) < 1e-9

    def test_nonpositive_rho_rejected(self):
        with pytest.raises(C.PreconditionError):
            C.check_omega_I(0, Fraction(3, 20))


class TestMatchingPoint:
    def test_x0_modulus(self):
        iv = C.x0_abs()
        assert iv.width < Fraction(1, 10**20)
        mp.dps = 40
        oracle = Fraction(str(mp.power(mpf(204) / 5, mpf(5) / 4) / 30))
        assert iv.lo - Fraction(1, 10**30) <= oracle <= iv.hi \
            + Fraction(1, 10**30)

    def test_z0_bounds_pass_with_frozen_margins(self):
        report = C.check_z0_bounds()
        assert report.verdict
        checks = _by_name(report)
        value_err = checks["matching_error_value"]
        slope_err = checks["matching_error_slope"]
        assert abs(float(value_err.value) - 0.0033707527263849) < 1e-13
        assert value_err.bound == Fraction(3, 890)
        assert abs(float(slope_err.value) - 0.0064905967502419) < 1e-13
        assert slope_err.bound == Fraction(29, 4468)
        # the rotated reference values agree with their printed truncations
        assert checks["C1_reference"].passed
        assert checks["C2_reference"].passed
        assert checks["value_correction_within_budget"].bound \
            == Fraction(1, 290)
        assert checks["slope_correction_within_budget"].bound \
            == Fraction(1, 152)


# ---------------------------------------------------------------------------
# Quadrature
# ---------------------------------------------------------------------------

class TestInversePowerIntegral:
    @pytest.mark.parametrize("quarters", [7, 9, 11])
    def test_contains_mpmath_oracle(self, quarters):
        mp.dps = 40
        alpha = mpf(quarters) / 4
        oracle = Fraction(str(quad(
            lambda p: (1 + p ** 2) ** (-alpha), [-1, inf])))
        iv = C.inverse_power_integral(quarters, T=64, panels=512)
        assert iv.lo <= oracle <= iv.hi

    def test_refinement_shrinks_and_stays_consistent(self):
        coarse = C.inverse_power_integral(7, T=64, panels=128)
        fine = C.inverse_power_integral(7, T=64, panels=512)
        assert fine.width < coarse.width
        assert coarse.intersects(fine)

    def test_divergent_power_rejected(self):
        with pytest.raises(C.PreconditionError):
            C.inverse_power_integral(2)


# ---------------------------------------------------------------------------
# Wedge certificate
# ---------------------------------------------------------------------------

class TestWedgeCertificate:
    def test_full_certificate(self, all_reports):
        reports, _ = all_reports
        report = reports["omega_12"]
        assert report.verdict
        checks = _by_name(report)
        assert abs(float(checks["wedge_quadratic_constant"].value)
                   - 1.2795917137) < 1e-8
        assert abs(float(checks["wedge_linear_growth_constant"].value)
                   - 1.4709764839) < 1e-8
        assert abs(float(checks["wedge_linear_constant"].value)
                   - 0.5964439082) < 1e-8
        assert abs(float(checks["wedge_ball_maps_into_itself"].value)
                   - 1.4324936357) < 1e-9
        assert abs(float(checks["wedge_contraction_below_one"].value)
                   - 0.9714338764) < 1e-9

    def test_small_ball_fails_by_name(self):
        report = C.check_omega_12(eps=Fraction(1, 10), panels=128)
        assert not report.verdict
        assert "wedge_ball_maps_into_itself" in [
            c.name for c in report.failures()]


# ---------------------------------------------------------------------------
# Lower-wedge certificate
# ---------------------------------------------------------------------------

class TestSectorCertificate:
    def test_route_constants_match_catalog_exactly(self):
        routes = C.route_constants()
        catalog = data.constant_catalog()
        assert set(routes) == set(catalog)
        for name in routes:
            assert routes[name] == catalog[name], name

    def test_full_certificate(self, all_reports):
        reports, _ = all_reports
        report = reports["omega_4"]
        assert report.verdict
        checks = _by_name(report)
        # every reference value sits in its truncation window
        for name in data.reference_values():
            assert checks[f"reference_{name}"].passed, name
        assert checks["reference_enclosure_width"].value \
            < Fraction(1, 10 ** 4)
        assert abs(float(checks["source_norm_at_most_2"].value)
                   - 1.9939740) < 1e-6
        assert checks["quadratic_bound"].bound == Fraction(18, 467)
        assert checks["linear_bound"].bound == Fraction(9, 40)
        assert checks["ball_maps_into_itself"].value == Fraction(91, 25)
        assert checks["contraction_factor"].value == Fraction(57, 100)

    def test_majorants_monotone_and_decreasing(self):
        majorants = C.sector_majorants()
        for name in ("M_1", "M_4", "V_M", "T_M"):
            assert majorants[name].nonincreasing_in_rho()
            at3 = majorants[name].enclosure(Fraction(3))
            at4 = majorants[name].enclosure(Fraction(4))
            assert at4.hi < at3.hi

    def test_point_values_match_references(self):
        points = C.sector_point_values(Fraction(3))
        printed = data.reference_values()
        for name, text in printed.items():
            assert points[name].intersects(truncation_window(text)), name

    def test_rho_below_three_rejected(self):
        with pytest.raises(C.PreconditionError):
            C.check_omega_4(2)

    def test_perturbed_table_fails_by_name(self, tmp_path, monkeypatch):
        src = data.data_dir()
        for f in data.DATA_FILES:
            shutil.copy(src / f, tmp_path / f)
        tables_path = tmp_path / "expansion_tables.json"
        blob = json.loads(tables_path.read_text())
        k, m, coeff = blob["tables"]["r"]["5"][0]
        blob["tables"]["r"]["5"][0] = [
            k, m, str(Fraction(coeff) + Fraction(1, 1000))]
        tables_path.write_text(json.dumps(blob))
        monkeypatch.setenv(data.DATA_ENV_VAR, str(tmp_path))
        data.clear_cache()
        report = C.check_omega_4(3)
        assert not report.verdict
        failing = [c.name for c in report.failures()]
        assert "catalog_M_G2" in failing or "catalog_M_G3" in failing


# ---------------------------------------------------------------------------
# Inner-interval wrapper and fault injection
# ---------------------------------------------------------------------------

class TestInnerWrapper:
    def test_wraps_passing_certificate(self, all_reports):
        reports, _ = all_reports
        report = reports["inner_interval"]
        assert report.verdict
        assert len(report.checks) == 21

    def test_widened_alpha1_fails_by_name(self):
        system = inner.build_system(alpha1=Fraction(1, 50))
        report = C.check_inner_interval(system)
        assert not report.verdict
        failing = {c.name for c in report.failures()}
        assert "value_window" in failing


# ---------------------------------------------------------------------------
# Maclaurin-envelope certificate
# ---------------------------------------------------------------------------

class TestTaylorRadius:
    def test_full_certificate(self, all_reports):
        reports, _ = all_reports
        report = reports["taylor_radius"]
        assert report.verdict
        checks = _by_name(report)
        # second and third window endpoints, exactly
        a, b, eps = Fraction(87, 469), Fraction(41, 134), Fraction(1, 108)
        assert checks["c2_window_below_eighth"].value == 3 * (a + eps) ** 2
        assert checks["c2_window_positive"].bound == 3 * (a - eps) ** 2
        assert checks["c3_window_below_fifteenth"].value \
            == Fraction(1, 6) - 2 * (a - eps) * (b - eps)
        assert checks["c3_window_positive"].bound \
            == Fraction(1, 6) - 2 * (a + eps) * (b + eps)
        # the tight base case is exact: 6/19 < 2 (20/37)^3
        k1 = checks["envelope_base_k1"]
        assert k1.bound - k1.value == Fraction(82, 962407)

    def test_envelope_run_frozen(self):
        worst, worst_k = C.taylor_envelope_run(256)
        assert worst_k == 1
        assert abs(float(worst) - 0.99795716) < 1e-7
        assert worst < 1

    def test_wider_windows_fail_by_name(self):
        report = C.check_taylor_radius(eps=Fraction(1, 20))
        assert not report.verdict
        failing = {c.name for c in report.failures()}
        assert "c1_below_six_nineteenths" in failing
        assert "c2_window_below_eighth" in failing


# ---------------------------------------------------------------------------
# Whole-suite assembly
# ---------------------------------------------------------------------------

class TestRunAll:
    def test_everything_passes(self, all_reports):
        reports, statement = all_reports
        assert set(reports) == {
            "inner_interval", "omega_12", "omega_4",
            "omega_I(rho=1,eps=3/20)",
            "omega_I(rho=~3.437193241246,eps=1/40)",
            "symbolic_tables", "taylor_radius", "z0_bounds",
        }
        assert all(r.verdict for r in reports.values())
        assert statement.startswith("Certified region")
        assert "arg z in [-3pi/5, pi]" in statement
        assert "|z| < 37/20" in statement

    def test_reports_sorted_by_name(self, all_reports):
        reports, _ = all_reports
        names = list(reports)
        assert names == sorted(names)

    def test_precondition_violation_reported_not_raised(self):
        reports, statement = C.run_all(rho=Fraction(2))
        omega4 = next(r for r in reports if r.name == "omega_4")
        assert not omega4.verdict
        assert [c.name for c in omega4.failures()] == ["rho_at_least_3"]
        assert statement.startswith("NOT CERTIFIED")

    def test_report_serialization(self, all_reports):
        reports, _ = all_reports
        for report in reports.values():
            blob = json.loads(json.dumps(report.as_dict()))
            assert blob["name"] == report.name
            assert isinstance(blob["verdict"], bool)
            for row in blob["inequalities"]:
                assert set(row) >= {"desc", "lhs", "lhs_float", "rel",
                                    "rhs", "rhs_float", "pass", "note"}
                assert len(row["lhs"]) == 2 and len(row["rhs"]) == 2
                lo, hi = (Fraction(row["lhs"][0]), Fraction(row["lhs"][1]))
                assert lo <= hi
