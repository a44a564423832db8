"""Tests for the floating-point evaluation layer.

Oracles: the frame examples and asymptotic error budgets are checked
against the exact certificate constants; integration landings are
checked against the certified windows at the origin; pole distances and
cross-frame agreements are frozen from stable high-precision runs
(values reproduced identically across tolerance levels before
freezing).
"""

import csv
import io
import random
from fractions import Fraction

import pytest
from mpmath import mp, mpc, mpf, workprec

from p1cert import evaluator as ev
from p1cert import inner
from p1cert.certificates import PreconditionError
from p1cert.numerics import Interval


@pytest.fixture(autouse=True)
def high_precision_references():
    """Reference constants in assertions need more than double precision."""
    saved = mp.prec
    mp.prec = 220
    yield
    mp.prec = saved


def _z0():
    with workprec(200):
        return mpf(17) / 10 * mp.expjpi(mpf(1) / 5)


def _x0_abs():
    with workprec(200):
        return (mpf(204) / 5) ** (mpf(5) / 4) / 30


# ---------------------------------------------------------------------------
# frames
# ---------------------------------------------------------------------------


class TestFrames:
    def test_ray_point_maps_to_imaginary_axis(self):
        point = ev.frame_map(_z0(), "z")
        assert abs(point.x.real) < mpf(10) ** -30
        assert abs(point.x.imag - _x0_abs()) < mpf(10) ** -30

    def test_t_frame_of_ray_point_is_minus_17_tenths(self):
        point = ev.frame_map(_z0(), "z")
        assert abs(point.t - mpf(-17) / 10) < mpf(10) ** -30

    def test_t_to_z_roundtrip_definition(self):
        point = ev.frame_map(Fraction(-17, 10), "t")
        assert abs(point.z - _z0()) < mpf(10) ** -30

    def test_origin_has_no_outer_frame(self):
        point = ev.frame_map(0, "z")
        assert point.x is None
        assert point.z == 0
        assert point.t == 0

    def test_x_frame_rejects_origin(self):
        with pytest.raises(PreconditionError):
            ev.frame_map(0, "x")

    def test_unknown_frame_rejected(self):
        with pytest.raises(ValueError):
            ev.frame_map(1.0, "w")

    def test_low_precision_rejected(self):
        with pytest.raises(PreconditionError):
            ev.frame_map(1.0, "z", precision_bits=64)

    def test_roundtrips_to_twenty_five_digits(self):
        rng = random.Random(20260817)
        with workprec(200):
            for _ in range(1000):
                radius = 10 ** rng.uniform(-1, 1)
                # keep clear of the principal-branch seam for the x trip
                angle = rng.uniform(-0.79, 0.79) * mp.pi
                z = radius * mpc(mp.cos(angle), mp.sin(angle))
                via_x = ev.frame_map(ev.frame_map(z, "z").x, "x")
                via_t = ev.frame_map(ev.frame_map(z, "z").t, "t")
                scale = max(1, abs(z))
                assert abs(via_x.z - z) < mpf(10) ** -25 * scale
                assert abs(via_t.z - z) < mpf(10) ** -25 * scale

    def test_data_rotation_matches_reference_constants(self):
        # (y, y') on the ray expressed through the outer-frame constants
        with workprec(200):
            x0 = _x0_abs()
            c1 = -mp.sqrt(mpf(17) / 60) * (1 + 4 / (25 * x0**2))
            c2 = mp.sqrt(mpf(60) / 17) * (mpf(1) / 12 - 4 / (75 * x0**2))
            y = c1 * mp.expjpi(mpf(-2) / 5)
            y_prime = c2 * mp.expjpi(mpf(2) / 5)
        g, g_prime = ev.g_from_y(y, y_prime)
        assert abs(g - c1) < mpf(10) ** -30
        assert abs(g_prime - c2) < mpf(10) ** -30
        # and the rotated data sits on top of the rational initial data
        assert abs(g - mpf(-280) / 519) < mpf(10) ** -6
        assert abs(g_prime - mpf(150) / 1013) < mpf(10) ** -4
        back = ev.y_from_g(g, g_prime)
        assert abs(back[0] - y) < mpf(10) ** -30
        assert abs(back[1] - y_prime) < mpf(10) ** -30

    def test_fivefold_map_is_rotation_by_fifth_roots(self):
        z, pref = ev.fivefold_map(1, 0)
        assert abs(z - 1) < mpf(10) ** -30
        assert abs(pref - 1) < mpf(10) ** -30
        with workprec(200):
            omega = mp.expjpi(mpf(2) / 5)
        z1, pref1 = ev.fivefold_map(2.0, 1)
        assert abs(z1 - 2 * omega) < mpf(10) ** -30
        assert abs(pref1 - omega**2) < mpf(10) ** -30
        # k is cyclic mod 5
        z6, pref6 = ev.fivefold_map(2.0, 6)
        assert abs(z6 - z1) < mpf(10) ** -30
        assert abs(pref6 - pref1) < mpf(10) ** -30


# ---------------------------------------------------------------------------
# asymptotic values
# ---------------------------------------------------------------------------


class TestAsymptotics:
    def test_stokes_constant(self):
        s = ev.stokes_constant()
        assert s.real == 0
        assert abs(s.imag - mpf("0.61803874")) < mpf(10) ** -7
        with workprec(200):
            assert abs(s**2 + mpf(6) / (5 * mp.pi)) < mpf(10) ** -35

    def test_h0_matches_closed_form(self):
        # independent transcription of the closed form as the oracle
        with workprec(200):
            for x in (mpc(0, -3), 4 * mp.expjpi(mpf(-3) / 8), mpc(5, -5)):
                s = mpc(0, 1) * mp.sqrt(mpf(6) / (5 * mp.pi))
                xi = s * mp.exp(-x) / mp.sqrt(x)
                head = (
                    xi
                    + xi**2 / 6
                    + xi**3 / 48
                    + xi**4 / 432
                    + 5 * xi**5 / 20736
                )
                layer1 = (-xi / 8 - 11 * xi**2 / 72 - 43 * xi**3 / 1152) / x
                layer2 = 9 * xi / (128 * x**2)
                expected = head + layer1 + layer2
                assert abs(ev.h0_value(x) - expected) < mpf(10) ** -30

    def test_ray_value_matches_certified_matching_data(self):
        z0 = _z0()
        asym = ev.asymptotic_y(z0, "omegaI")
        with workprec(200):
            x0 = _x0_abs()
            c1 = -mp.sqrt(mpf(17) / 60) * (1 + 4 / (25 * x0**2))
            reference = c1 * mp.expjpi(mpf(-2) / 5)
        assert abs(asym.value - reference) < mpf(3) / 890
        assert asym.error < mpf(3) / 890
        assert asym.error > mpf(3) / 890 * mpf("0.99")  # the budget is tight

    def test_ray_error_decays_like_five_halves_power(self):
        with workprec(200):
            z10 = ev.frame_map(mpc(0, 10), "x").z
            z100 = ev.frame_map(mpc(0, 100), "x").z
        e10 = ev.asymptotic_y(z10, "omegaI").error
        e100 = ev.asymptotic_y(z100, "omegaI").error
        # error ~ |sqrt(z/x)| |x|^{-5/2} and |z| ~ |x|^{4/5}:
        # overall |x|^{-1/10 - 5/2} = |x|^{-13/5}
        ratio = e10 / e100
        assert abs(ratio / mpf(10) ** mpf("2.6") - 1) < mpf("0.01")

    def test_ray_preconditions(self):
        with pytest.raises(PreconditionError):
            ev.asymptotic_y(mpf(1) / 10 * mp.expjpi(mpf(1) / 5), "omegaI")
        with pytest.raises(PreconditionError):  # off the ray
            ev.asymptotic_y(2.0, "omegaI")
        with pytest.raises(PreconditionError):  # origin
            ev.asymptotic_y(0, "omegaI")
        with pytest.raises(ValueError):
            ev.asymptotic_y(_z0(), "omega2")

    def test_wedge_preconditions(self):
        with workprec(200):
            z_small = ev.frame_map(mpc(0, -2.9), "x").z     # |x| < 3
            z_off = ev.frame_map(3.5 * mp.expjpi(mpf(-1) / 8), "x").z
        with pytest.raises(PreconditionError):
            ev.asymptotic_y(z_small, "omega4")
        with pytest.raises(PreconditionError):
            ev.asymptotic_y(z_off, "omega4")

    def test_wedge_corner_agrees_with_integration(self):
        # continue the certified data from the origin to the z of x = -3i
        # and compare with the asymptotic representation there
        point = ev.frame_map(mpc(0, -3), "x")
        asym = ev.asymptotic_y(point.z, "omega4")
        run = ev.integrate(
            inner.CENTER_VALUE,
            inner.CENTER_SLOPE,
            0,
            point.t,
            tol=Fraction(1, 10**20),
        )
        y_int, _ = ev.y_from_g(run.value, run.slope)
        difference = abs(asym.value - y_int)
        assert difference < asym.error
        assert difference < mpf("0.01")  # far sharper than the budget

    def test_wedge_interior_agrees_with_integration(self):
        with workprec(200):
            x = 4 * mp.expjpi(mpf(-3) / 8)
        point = ev.frame_map(x, "x")
        asym = ev.asymptotic_y(point.z, "omega4")
        run = ev.integrate(
            inner.CENTER_VALUE,
            inner.CENTER_SLOPE,
            0,
            point.t,
            tol=Fraction(1, 10**20),
        )
        y_int, _ = ev.y_from_g(run.value, run.slope)
        assert abs(asym.value - y_int) < asym.error


# ---------------------------------------------------------------------------
# Taylor coefficients
# ---------------------------------------------------------------------------


class TestTaylorCoeffs:
    def test_zero_data_forces_only_the_cubic(self):
        coeffs = ev.taylor_coeffs(0, 0, 0, 5)
        assert coeffs[2] == 0
        assert abs(coeffs[3] - mpf(1) / 6) < mpf(10) ** -40
        assert coeffs[4] == 0
        assert coeffs[5] == 0

    def test_forced_coefficients_at_origin_center(self):
        a, b = mpf(1) / 5, mpf(2) / 7
        coeffs = ev.taylor_coeffs(-a, b, 0, 3)
        assert abs(coeffs[2] - 3 * a * a) < mpf(10) ** -35
        assert abs(coeffs[3] - (2 * (-a) * b + mpf(1) / 6)) < mpf(10) ** -35

    def test_center_enters_only_the_quadratic(self):
        center = mpf(1) / 2
        coeffs = ev.taylor_coeffs(mpf(1) / 3, mpf(-1) / 7, center, 3)
        expected_c2 = 3 * (mpf(1) / 3) ** 2 + center / 2
        expected_c3 = 2 * (mpf(1) / 3) * (mpf(-1) / 7) + mpf(1) / 6
        assert abs(coeffs[2] - expected_c2) < mpf(10) ** -35
        assert abs(coeffs[3] - expected_c3) < mpf(10) ** -35

    def test_order_forty_truncation_solves_the_equation_through_38(self):
        center = mpf(1) / 2
        coeffs = ev.taylor_coeffs(mpf(1) / 3, mpf(-1) / 7, center, 40)
        with workprec(250):
            residual = mpf(0)
            for k in range(39):
                second = (k + 1) * (k + 2) * coeffs[k + 2]
                square = mpc(0)
                for j in range(k + 1):
                    square += coeffs[j] * coeffs[k - j]
                rhs = 6 * square
                if k == 0:
                    rhs += center
                if k == 1:
                    rhs += 1
                residual = max(residual, abs(second - rhs))
        assert residual < mpf(10) ** -30

    def test_count_below_two_rejected(self):
        with pytest.raises(PreconditionError):
            ev.taylor_coeffs(0, 0, 0, 1)

    def test_series_eval_derivative_consistency(self):
        coeffs = ev.taylor_coeffs(mpf(1) / 3, mpf(-1) / 7, 0, 30)
        g, gp = ev.series_eval(coeffs, mpf(1) / 10)
        step = mpf(10) ** -20
        g_plus, _ = ev.series_eval(coeffs, mpf(1) / 10 + step)
        assert abs((g_plus - g) / step - gp) < mpf(10) ** -15


# ---------------------------------------------------------------------------
# integration
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def landing_run():
    """The canonical run: certified data at t = -17/10 marched to 0."""
    return ev.integrate(
        ev.INITIAL_VALUE,
        ev.INITIAL_SLOPE,
        ev.INITIAL_TIME,
        0,
        tol=Fraction(1, 10**25),
        precision_bits=100,
        report_defect=True,
    )


class TestIntegration:
    def test_initial_data_matches_quasi_solution(self):
        from p1cert.polybound import poly_eval

        system = inner.build_system()
        assert poly_eval(system.g0, Fraction(0)) == ev.INITIAL_VALUE
        assert poly_eval(system.g0_prime, Fraction(0)) == ev.INITIAL_SLOPE
        assert ev.INITIAL_TIME == inner.T0

    def test_landing_inside_certified_value_window(self, landing_run):
        lo = Fraction(-87, 469) - Fraction(1, 167)
        hi = Fraction(-87, 469) + Fraction(1, 167)
        assert mpf(lo.numerator) / lo.denominator < landing_run.value.real
        assert landing_run.value.real < mpf(hi.numerator) / hi.denominator

    def test_landing_inside_certified_slope_window(self, landing_run):
        lo = Fraction(41, 134) - Fraction(1, 108)
        hi = Fraction(41, 134) + Fraction(1, 108)
        assert mpf(lo.numerator) / lo.denominator < landing_run.slope.real
        assert landing_run.slope.real < mpf(hi.numerator) / hi.denominator

    def test_landing_values_frozen(self, landing_run):
        # frozen from runs at 100/160/200 bits and tolerances 1e-20..1e-30
        assert abs(landing_run.value.real - mpf("-0.18550346617190674")) < mpf(10) ** -15
        assert abs(landing_run.slope.real - mpf("0.30593502943856533")) < mpf(10) ** -15

    def test_forward_backward_defect_small(self, landing_run):
        assert landing_run.defect is not None
        assert landing_run.defect < mpf(10) ** -20   # the acceptance gate
        assert landing_run.defect < 10 * mpf(10) ** -25  # within 10*tol

    def test_real_data_stays_real(self, landing_run):
        assert landing_run.value.imag == 0
        assert landing_run.slope.imag == 0

    def test_halving_tolerance_quarters_the_defect(self):
        defects = []
        for tol in (Fraction(1, 10**8), Fraction(1, 2 * 10**8)):
            run = ev.integrate(
                ev.INITIAL_VALUE,
                ev.INITIAL_SLOPE,
                ev.INITIAL_TIME,
                0,
                tol=tol,
                precision_bits=160,
                report_defect=True,
            )
            defects.append(run.defect)
        assert defects[0] / defects[1] >= 4

    def test_series_agrees_with_integration_at_unit_distance(self):
        coeffs = ev.taylor_coeffs(inner.CENTER_VALUE, inner.CENTER_SLOPE, 0, 80)
        for target in (-1, 1):
            series_value, series_slope = ev.series_eval(coeffs, target)
            run = ev.integrate(inner.CENTER_VALUE, inner.CENTER_SLOPE, 0, target)
            assert abs(series_value - run.value) < mpf(10) ** -10
            assert abs(series_slope - run.slope) < mpf(10) ** -10

    def test_zero_length_run(self):
        run = ev.integrate(1, 2, mpf(1) / 2, mpf(1) / 2, report_defect=True)
        assert run.value == 1
        assert run.slope == 2
        assert run.steps == 0
        assert run.defect == 0

    def test_trajectory_endpoints(self):
        run = ev.integrate(
            ev.INITIAL_VALUE,
            ev.INITIAL_SLOPE,
            ev.INITIAL_TIME,
            0,
            tol=Fraction(1, 10**8),
            keep_trajectory=True,
        )
        assert len(run.trajectory) == run.steps + 1
        t_first, g_first = run.trajectory[0]
        assert abs(t_first - mpf(-17) / 10) < mpf(10) ** -30
        assert abs(g_first - mpf(-280) / 519) < mpf(10) ** -30
        t_last, g_last = run.trajectory[-1]
        assert abs(t_last) < mpf(10) ** -30
        assert g_last == run.value

    def test_order_is_clamped(self):
        run_low = ev.integrate(0, 0, 0, mpf(1) / 10, order=5)
        run_high = ev.integrate(0, 0, 0, mpf(1) / 10, order=99)
        assert run_low.order == ev.MIN_ORDER
        assert run_high.order == ev.MAX_ORDER

    def test_tolerance_validation(self):
        with pytest.raises(PreconditionError):
            ev.integrate(0, 0, 0, 1, tol=2)
        with pytest.raises(PreconditionError):
            ev.integrate(0, 0, 0, 1, precision_bits=64)

    def test_blowup_raises_pole_proximity(self):
        with pytest.raises(ev.PoleProximityError) as info:
            ev.integrate(
                inner.CENTER_VALUE,
                inner.CENTER_SLOPE,
                0,
                3,
                tol=Fraction(1, 10**8),
            )
        estimate = info.value.estimate
        assert mpf("2.3") < abs(estimate) < mpf("2.5")


# ---------------------------------------------------------------------------
# poles
# ---------------------------------------------------------------------------


class TestPoles:
    def test_real_axis_pole_distance(self):
        est = ev.pole_estimate(0, tol=Fraction(1, 10**10))
        # frozen: identical to 18 digits across tol 1e-8 / 1e-10 / 1e-14
        assert abs(est.distance - mpf("2.38237501041002158")) < mpf(10) ** -9
        assert est.fit_residual < mpf(10) ** -10
        assert abs(est.location.imag) < mpf(10) ** -20

    def test_distance_consistent_with_reported_radius_of_analyticity(self):
        est = ev.pole_estimate(0, tol=Fraction(1, 10**8))
        known = mpf("2.3841687")
        assert abs(est.distance - known) / known < mpf("0.05")
        assert est.distance > mpf(37) / 20

    def test_pole_free_direction_not_found_at_horizon(self):
        with pytest.raises(ev.PoleNotFoundError) as info:
            ev.pole_estimate(mp.pi / 2, tol=Fraction(1, 10**8))
        assert info.value.horizon == ev.DEFAULT_HORIZON

    def test_ray_missing_the_pole_stays_bounded(self):
        # rays that do not pass through a pole remain bounded even
        # inside the wedge that may contain poles
        with pytest.raises(ev.PoleNotFoundError):
            ev.pole_estimate(mp.pi / 25, tol=Fraction(1, 10**8))

    def test_scan_reports_real_axis_minimum(self):
        scan = ev.pole_scan(tol=Fraction(1, 10**8))
        assert scan.best.direction == 0
        assert abs(scan.best.distance - mpf("2.382375010410")) < mpf(10) ** -9
        assert len(scan.estimates) >= 1
        assert len(scan.unbounded_directions) >= 7
        assert "interpretation" not in scan.note or scan.note  # note present
        assert "estimate" in scan.note

    def test_scan_without_any_pole_raises(self):
        with pytest.raises(ev.PoleNotFoundError):
            ev.pole_scan(directions=[mp.pi / 2, -mp.pi / 2], tol=Fraction(1, 10**8))


# ---------------------------------------------------------------------------
# origin data and high-level evaluation
# ---------------------------------------------------------------------------


class TestOriginAndEvaluation:
    def test_origin_windows_are_the_certified_ones(self):
        data = ev.y_at_zero()
        assert data.value_window == Interval(
            Fraction(-87, 469) - Fraction(1, 167),
            Fraction(-87, 469) + Fraction(1, 167),
        )
        assert data.slope_window == Interval(
            Fraction(41, 134) - Fraction(1, 108),
            Fraction(41, 134) + Fraction(1, 108),
        )

    def test_origin_y_frame_images(self):
        data = ev.y_at_zero()
        with workprec(200):
            expected_y = mp.expjpi(mpf(-2) / 5) * (mpf(-87) / 469)
            expected_slope = -mp.expjpi(mpf(-3) / 5) * (mpf(41) / 134)
        assert abs(data.y_value - expected_y) < mpf(10) ** -30
        assert abs(data.y_slope - expected_slope) < mpf(10) ** -30
        assert abs(data.y_value_radius - mpf(1) / 167) < mpf(10) ** -35
        assert abs(data.y_slope_radius - mpf(1) / 108) < mpf(10) ** -35

    def test_origin_center_values(self):
        data = ev.y_at_zero()
        assert data.value_window.mid == Fraction(-87, 469)
        assert data.slope_window.mid == Fraction(41, 134)
        assert abs(mpf(-87) / 469 - mpf("-0.185501")) < mpf(10) ** -6
        assert abs(mpf(41) / 134 - mpf("0.305970")) < mpf(10) ** -6

    def test_origin_requires_certificate(self, monkeypatch):
        monkeypatch.setattr(ev, "_INNER_CERTIFIED", False)
        with pytest.raises(PreconditionError):
            ev.y_at_zero()

    def test_landing_run_confirms_origin_window(self, landing_run):
        data = ev.y_at_zero()
        lo = data.value_window.lo
        hi = data.value_window.hi
        assert mpf(lo.numerator) / lo.denominator < landing_run.value.real
        assert landing_run.value.real < mpf(hi.numerator) / hi.denominator

    def test_evaluate_origin(self):
        outcome = ev.evaluate_point(0)
        assert outcome.method == "origin-enclosure"
        assert outcome.rigorous
        assert abs(outcome.error_bound - mpf(1) / 167) < mpf(10) ** -40
        assert abs(outcome.slope_error_bound - mpf(1) / 108) < mpf(10) ** -40

    def test_evaluate_picks_ray_asymptotics(self):
        outcome = ev.evaluate_point(_z0())
        assert outcome.method == "asymptotic-omegaI"
        assert outcome.rigorous
        assert outcome.error_bound < mpf(3) / 890

    def test_evaluate_picks_wedge_asymptotics(self):
        z = ev.frame_map(mpc(0, -3), "x").z
        outcome = ev.evaluate_point(z)
        assert outcome.method == "asymptotic-omega4"
        assert outcome.rigorous

    def test_evaluate_interior_uses_integration(self):
        outcome = ev.evaluate_point(mpc("0.3", "0.1"))
        assert outcome.method == "integration"
        assert not outcome.rigorous
        assert outcome.error_estimate is not None
        assert outcome.warning is None
        assert outcome.y is not None
        # cross-check against a direct series evaluation
        coeffs = ev.taylor_coeffs(inner.CENTER_VALUE, inner.CENTER_SLOPE, 0, 60)
        t = ev.frame_map(mpc("0.3", "0.1"), "z").t
        g_series, _ = ev.series_eval(coeffs, t)
        y_series, _ = ev.y_from_g(g_series, 0)
        assert abs(outcome.y - y_series) < mpf(10) ** -12

    def test_evaluate_beyond_disk_toward_poles_warns(self):
        # t = 2.2 on the real axis: outside |t| = 37/20, before the pole
        z = ev.frame_map(mpf("2.2"), "t").z
        outcome = ev.evaluate_point(z, tol=Fraction(1, 10**10))
        assert outcome.method == "integration"
        assert not outcome.rigorous
        assert outcome.warning is not None
        assert outcome.y is not None

    def test_evaluate_past_the_pole_reports_estimate(self):
        z = ev.frame_map(mpf("2.5"), "t").z
        outcome = ev.evaluate_point(z, tol=Fraction(1, 10**8))
        assert outcome.method == "integration"
        assert outcome.y is None
        assert "t_p" in outcome.warning


# ---------------------------------------------------------------------------
# CSV export
# ---------------------------------------------------------------------------


class TestCsv:
    def test_series_csv_shape_and_values(self):
        coeffs = ev.taylor_coeffs(inner.CENTER_VALUE, inner.CENTER_SLOPE, 0, 8)
        text = ev.series_csv(coeffs)
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["k", "re_ck", "im_ck"]
        assert len(rows) == 10
        assert rows[1][0] == "0"
        assert abs(float(rows[1][1]) - float(Fraction(-87, 469))) < 1e-15
        assert float(rows[1][2]) == 0.0
        assert abs(float(rows[2][1]) - float(Fraction(41, 134))) < 1e-15

    def test_series_csv_deterministic(self):
        coeffs = ev.taylor_coeffs(inner.CENTER_VALUE, inner.CENTER_SLOPE, 0, 12)
        assert ev.series_csv(coeffs) == ev.series_csv(coeffs)

    def test_trajectory_csv_real_axis(self):
        run = ev.integrate(
            ev.INITIAL_VALUE,
            ev.INITIAL_SLOPE,
            ev.INITIAL_TIME,
            0,
            tol=Fraction(1, 10**8),
            keep_trajectory=True,
        )
        text = ev.trajectory_csv(run.trajectory)
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["t", "re_g", "im_g"]
        assert len(rows) == len(run.trajectory) + 1
        assert abs(float(rows[1][0]) + 1.7) < 1e-15
        assert abs(float(rows[1][1]) - float(Fraction(-280, 519))) < 1e-15
        assert float(rows[-1][2]) == 0.0

    def test_trajectory_csv_complex_axis_rendering(self):
        point = (mpc(1, -2), mpc(3, 4))
        text = ev.trajectory_csv([point])
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[1][0] == "1.0-2.0i"
        assert rows[1][1] == "3.0"
        assert rows[1][2] == "4.0"
