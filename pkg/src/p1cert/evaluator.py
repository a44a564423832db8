"""Floating-point evaluation of the certified Painlevé I solution.

The certificate modules prove, in exact rational arithmetic, that a
distinguished solution of  y'' = 6 y^2 + z  (the tritronquée) exists and
is pole-free on a sector plus a disk.  This module *evaluates* that
solution numerically: coordinate-frame changes, asymptotic values with
rigorous error bounds where the certificates supply one, a high-order
adaptive Taylor integrator for the equation in the rotated frame

    g'' = 6 g^2 + t,        g(t) = e^(2*pi*i/5) * y(-t * e^(i*pi/5)),

pole-distance estimation, and CSV export helpers.

Everything here is arbitrary-precision floating point (mpmath, 100-bit
minimum working precision).  Apart from the asymptotic error formulas
and the enclosure windows at the origin -- which are certified facts
imported from the exact modules -- outputs are high-quality numerical
estimates, not proofs; the exact certificates never depend on this
module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from mpmath import mp, mpc, mpf, workprec

from . import formal, inner
from .certificates import PreconditionError
from .numerics import Interval

Number = Union[int, float, Fraction, mpf, mpc, complex]

#: Default working precision (bits) for every routine in this module.
DEFAULT_PRECISION_BITS = 128

#: Hard minimum working precision; requests below this raise.
MIN_PRECISION_BITS = 100

#: Extra internal bits so that returned values are clean at the
#: requested precision.
GUARD_BITS = 32

#: Default accuracy target for :func:`integrate`.
DEFAULT_TOL = Fraction(1, 10**25)

#: A trajectory value of this magnitude is treated as a pole encounter.
BLOWUP_THRESHOLD = 10**8

#: Default search horizon (in |t|) for :func:`pole_estimate`.
DEFAULT_HORIZON = 10

#: Taylor order window for the integrator.
MIN_ORDER, MAX_ORDER = 16, 24

_MAX_STEPS = 500_000

#: Canonical initial data for the rotated-frame equation: the value and
#: slope of the certified quasi-solution at t = -17/10.  These are the
#: exact rationals whose forward flow the interior certificate traps at
#: the origin.
INITIAL_TIME = inner.T0
INITIAL_VALUE = Fraction(-280, 519)
INITIAL_SLOPE = Fraction(150, 1013)

#: Asymptotic-region tokens accepted by :func:`asymptotic_y`:
#: ``omegaI`` is the oscillatory ray arg x = pi/2 beyond the matching
#: radius, ``omega4`` the wedge -pi/2 <= arg x <= -pi/4 beyond radius 3.
ASYMPTOTIC_REGIONS = ("omegaI", "omega4")

__all__ = [
    "DEFAULT_PRECISION_BITS",
    "MIN_PRECISION_BITS",
    "DEFAULT_TOL",
    "BLOWUP_THRESHOLD",
    "DEFAULT_HORIZON",
    "MIN_ORDER",
    "MAX_ORDER",
    "INITIAL_TIME",
    "INITIAL_VALUE",
    "INITIAL_SLOPE",
    "ASYMPTOTIC_REGIONS",
    "PreconditionError",
    "PoleProximityError",
    "PoleNotFoundError",
    "FramePoint",
    "AsymptoticValue",
    "IntegrationResult",
    "PoleEstimate",
    "PoleScan",
    "ZeroData",
    "Evaluation",
    "frame_map",
    "g_from_y",
    "y_from_g",
    "fivefold_map",
    "stokes_constant",
    "h0_value",
    "asymptotic_y",
    "taylor_coeffs",
    "series_eval",
    "integrate",
    "pole_estimate",
    "pole_scan",
    "y_at_zero",
    "evaluate_point",
    "series_csv",
    "trajectory_csv",
]


# --------------------------------------------------------------------------
# precision and coercion helpers
# --------------------------------------------------------------------------


def _require_bits(precision_bits: int) -> None:
    if not isinstance(precision_bits, int):
        raise TypeError(f"precision_bits must be an int, got {precision_bits!r}")
    if precision_bits < MIN_PRECISION_BITS:
        raise PreconditionError(
            f"working precision below the {MIN_PRECISION_BITS}-bit minimum: "
            f"{precision_bits}"
        )


def _to_mpf(value: Number) -> mpf:
    if isinstance(value, Fraction):
        return mpf(value.numerator) / mpf(value.denominator)
    if isinstance(value, (int, float, mpf)):
        return mpf(value)
    raise TypeError(f"cannot interpret {value!r} as a real number")


def _to_mpc(value: Number) -> mpc:
    if isinstance(value, mpc):
        return value
    if isinstance(value, complex):
        return mpc(value.real, value.imag)
    return mpc(_to_mpf(value))


def _fifth_root_of_unity_power(numerator: int, denominator: int = 5) -> mpc:
    """e^(i*pi*numerator/denominator) at the current working precision."""
    return mp.expjpi(mpf(numerator) / denominator)


# --------------------------------------------------------------------------
# coordinate frames
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FramePoint:
    """One evaluation point in all three coordinate frames.

    * ``z``  -- the frame of  y'' = 6 y^2 + z;
    * ``t``  -- the rotated frame  z = -t * e^(i*pi/5)  in which the
      certified disk is centred at t = 0 and the distinguished ray is
      the negative real axis;
    * ``x``  -- the outer frame  x = (e^(i*pi/4)/30) * (24 z)^(5/4)
      (principal branch), used by the asymptotic representations.
      ``None`` at the origin, where the branch point makes x undefined.
    """

    z: mpc
    t: mpc
    x: Optional[mpc]


def _x_of_z(z: mpc) -> mpc:
    return _fifth_root_of_unity_power(1, 4) / 30 * (24 * z) ** (mpf(5) / 4)


def _z_of_x(x: mpc) -> mpc:
    return (30 * x * _fifth_root_of_unity_power(-1, 4)) ** (mpf(4) / 5) / 24


def frame_map(
    value: Number,
    frame: str = "z",
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> FramePoint:
    """Map a point given in one frame to all three frames.

    ``frame`` names the frame of ``value``: ``"z"``, ``"t"`` or ``"x"``.
    The branch conventions are principal everywhere, so the z <-> x
    round trip is the identity exactly for arg z in (-4*pi/5, 4*pi/5];
    the z <-> t round trip is a rotation and holds for every z.
    Mapping from the x frame requires x != 0.
    """
    _require_bits(precision_bits)
    if frame not in ("z", "t", "x"):
        raise ValueError(f"unknown frame {frame!r}; expected 'z', 't' or 'x'")
    with workprec(precision_bits + GUARD_BITS):
        w = _to_mpc(value)
        if frame == "z":
            z = w
        elif frame == "t":
            z = -w * _fifth_root_of_unity_power(1)
        else:
            if w == 0:
                raise PreconditionError(
                    "the outer frame has a branch point at the origin; "
                    "x must be nonzero"
                )
            z = _z_of_x(w)
        t = -z * _fifth_root_of_unity_power(-1)
        x = None if z == 0 else _x_of_z(z)
        return FramePoint(z=z, t=t, x=x)


def g_from_y(
    y: Number,
    y_prime: Number,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> Tuple[mpc, mpc]:
    """Rotate solution data (y, dy/dz) into the t frame (g, dg/dt)."""
    _require_bits(precision_bits)
    with workprec(precision_bits + GUARD_BITS):
        g = _fifth_root_of_unity_power(2) * _to_mpc(y)
        g_prime = -_fifth_root_of_unity_power(3) * _to_mpc(y_prime)
        return g, g_prime


def y_from_g(
    g: Number,
    g_prime: Number,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> Tuple[mpc, mpc]:
    """Rotate t-frame data (g, dg/dt) back to (y, dy/dz)."""
    _require_bits(precision_bits)
    with workprec(precision_bits + GUARD_BITS):
        y = _fifth_root_of_unity_power(-2) * _to_mpc(g)
        y_prime = -_fifth_root_of_unity_power(-3) * _to_mpc(g_prime)
        return y, y_prime


def fivefold_map(
    z: Number,
    k: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> Tuple[mpc, mpc]:
    """The five-fold symmetry of  y'' = 6 y^2 + z  as a rotation formula.

    Returns ``(omega * z, omega**2)`` with omega = e^(2*pi*i*k/5): if y
    solves the equation then so does  z |-> omega**2 * y(omega * z),
    and the five choices of k exhaust the rotated family.  This is the
    only bridge to the other distinguished solutions provided here.
    """
    _require_bits(precision_bits)
    if not isinstance(k, int):
        raise TypeError("the symmetry index k must be an integer")
    with workprec(precision_bits + GUARD_BITS):
        omega = _fifth_root_of_unity_power(2 * (k % 5))
        return omega * _to_mpc(z), omega * omega


# --------------------------------------------------------------------------
# asymptotic values with certified error bounds
# --------------------------------------------------------------------------


def stokes_constant(precision_bits: int = DEFAULT_PRECISION_BITS) -> mpc:
    """The exponential-correction coefficient  S = i * sqrt(6/(5*pi))."""
    _require_bits(precision_bits)
    with workprec(precision_bits + GUARD_BITS):
        return mpc(0, 1) * mp.sqrt(mpf(6) / (5 * mp.pi))


def h0_value(x: Number, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpc:
    """Evaluate the exponentially small quasi-solution correction h0(x).

    The exact term structure (a polynomial in  xi = S e^(-x)/sqrt(x)
    with inverse-power coefficients in x) is taken directly from the
    symbolically verified series, so this evaluation cannot drift from
    the table identities.
    """
    _require_bits(precision_bits)
    with workprec(precision_bits + GUARD_BITS):
        xv = _to_mpc(x)
        if xv == 0:
            raise PreconditionError("h0 is undefined at x = 0")
        s_const = mpc(0, 1) * mp.sqrt(mpf(6) / (5 * mp.pi))
        total = mpc(0)
        for (k, j, m), coeff in formal.h0_series().items():
            term = _to_mpf(coeff) * s_const**k
            term = term * xv ** (mpf(-j) / 2)
            if m:
                term = term * mp.exp(-m * xv)
            total += term
        return total


@dataclass(frozen=True)
class AsymptoticValue:
    """An asymptotic value of y together with a certified error radius."""

    value: mpc
    error: mpf
    region: str
    point: FramePoint


_ARG_SLACK = 1e-9
_RADIUS_SLACK = 1e-9


def asymptotic_y(
    z: Number,
    region: str,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> AsymptoticValue:
    """Evaluate y(z) from a certified asymptotic representation.

    ``region`` selects which contraction certificate supplies the error
    bound:

    * ``"omegaI"`` -- the oscillatory ray arg x = pi/2 with
      |x| >= (204/5)^(5/4)/30 (~= 3.437).  Value
      i*sqrt(z/6) * (1 - 4/(25 x^2)); the fixed-point ball of radius
      (41/40)*(784/3125) in the weighted norm gives the error
      |sqrt(z/(6x))| * (41/40)*(784/3125) * |x|^(-5/2).
    * ``"omega4"`` -- the wedge -pi/2 <= arg x <= -pi/4 with |x| >= 3.
      Value  i*sqrt(z/6) * (1 - 4/(25 x^2) + h0(x)), where h0 is the
      exponentially small quasi-solution; the sector certificate traps
      the full correction as  h0 + G/sqrt(x)  with
      |G| <= 4*|x|^(-5/2), giving the error
      |sqrt(z/6)| * 4 * |x|^(-3).

    Raises :class:`PreconditionError` when z lies outside the requested
    region (small floating slack is allowed at the boundary).
    """
    _require_bits(precision_bits)
    if region not in ASYMPTOTIC_REGIONS:
        raise ValueError(
            f"unknown region {region!r}; expected one of {ASYMPTOTIC_REGIONS}"
        )
    point = frame_map(z, "z", precision_bits)
    if point.x is None:
        raise PreconditionError("asymptotic representations require z != 0")
    with workprec(precision_bits + GUARD_BITS):
        x = point.x
        zv = point.z
        radius = abs(x)
        angle = mp.arg(x)
        if region == "omegaI":
            min_radius = (mpf(204) / 5) ** (mpf(5) / 4) / 30
            if radius < min_radius * (1 - _RADIUS_SLACK):
                raise PreconditionError(
                    f"|x| = {mp.nstr(radius, 12)} is below the certified ray "
                    f"radius {mp.nstr(min_radius, 12)}"
                )
            if abs(angle - mp.pi / 2) > _ARG_SLACK:
                raise PreconditionError(
                    "z is not on the oscillatory ray (arg x must be pi/2, "
                    f"got {mp.nstr(angle, 12)})"
                )
            value = mpc(0, 1) * mp.sqrt(zv / 6) * (1 - 4 / (25 * x * x))
            error = (
                abs(mp.sqrt(zv / (6 * x)))
                * (mpf(41) / 40)
                * (mpf(784) / 3125)
                * radius ** (mpf(-5) / 2)
            )
        else:
            if radius < 3 * (1 - _RADIUS_SLACK):
                raise PreconditionError(
                    f"|x| = {mp.nstr(radius, 12)} is below the certified "
                    "wedge radius 3"
                )
            if not (-mp.pi / 2 - _ARG_SLACK <= angle <= -mp.pi / 4 + _ARG_SLACK):
                raise PreconditionError(
                    "arg x must lie in [-pi/2, -pi/4] for the wedge "
                    f"representation, got {mp.nstr(angle, 12)}"
                )
            correction = h0_value(x, precision_bits)
            value = (
                mpc(0, 1) * mp.sqrt(zv / 6) * (1 - 4 / (25 * x * x) + correction)
            )
            error = abs(mp.sqrt(zv / 6)) * 4 * radius**-3
        return AsymptoticValue(value=value, error=error, region=region, point=point)


# --------------------------------------------------------------------------
# Taylor coefficients and series evaluation
# --------------------------------------------------------------------------


def taylor_coeffs(
    value: Number,
    slope: Number,
    center: Number,
    count: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> List[mpc]:
    """Taylor coefficients of the solution of  g'' = 6 g^2 + t  at ``center``.

    Given g(center) = ``value`` and g'(center) = ``slope``, returns
    [c_0, ..., c_count] with g(center + s) = sum c_k s^k.  The
    inhomogeneous term contributes  center/2  to c_2 and  1/6  to c_3
    (writing t = center + s); beyond that the recurrence is the plain
    Cauchy square:  (k+1)(k+2) c_{k+2} = 6 * sum_{j<=k} c_j c_{k-j}.
    Requires ``count`` >= 2.
    """
    _require_bits(precision_bits)
    if count < 2:
        raise PreconditionError(
            "count must be at least 2 (the first forced coefficient)"
        )
    with workprec(precision_bits + GUARD_BITS):
        return _taylor_raw(_to_mpc(value), _to_mpc(slope), _to_mpc(center), count)


def _taylor_raw(c0: mpc, c1: mpc, center: mpc, count: int) -> List[mpc]:
    coeffs = [c0, c1, 3 * c0 * c0 + center / 2]
    if count >= 3:
        coeffs.append(2 * c0 * c1 + mpf(1) / 6)
    for k in range(2, count - 1):
        acc = mpc(0)
        for j in range(k + 1):
            acc += coeffs[j] * coeffs[k - j]
        coeffs.append(6 * acc / ((k + 1) * (k + 2)))
    return coeffs[: count + 1]


def series_eval(
    coeffs: Sequence[Number],
    displacement: Number,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> Tuple[mpc, mpc]:
    """Evaluate a Taylor polynomial and its derivative at ``displacement``."""
    _require_bits(precision_bits)
    with workprec(precision_bits + GUARD_BITS):
        s = _to_mpc(displacement)
        cs = [_to_mpc(c) for c in coeffs]
        g = mpc(0)
        for ck in reversed(cs):
            g = g * s + ck
        g_prime = mpc(0)
        for k in range(len(cs) - 1, 0, -1):
            g_prime = g_prime * s + k * cs[k]
        return g, g_prime


# --------------------------------------------------------------------------
# adaptive Taylor integration of  g'' = 6 g^2 + t
# --------------------------------------------------------------------------


class PoleProximityError(RuntimeError):
    """The trajectory blew up: a double pole of the solution is near.

    Carries the last state and the double-pole location estimate
    ``t + 2 g/g'`` implied by the local behaviour g ~ (t - t_p)^(-2).
    """

    def __init__(self, t_last: mpc, value: mpc, slope: mpc):
        self.t_last = t_last
        self.value = value
        self.slope = slope
        self.estimate = t_last + 2 * value / slope
        super().__init__(
            f"trajectory magnitude exceeded {BLOWUP_THRESHOLD:.0e} at "
            f"t = {t_last}; double-pole estimate t_p ~= {self.estimate}"
        )


class PoleNotFoundError(RuntimeError):
    """No blowup was met within the search horizon."""

    def __init__(self, direction, horizon):
        self.direction = direction
        self.horizon = horizon
        super().__init__(
            f"no pole within |t| <= {horizon} along direction {direction}"
        )


@dataclass(frozen=True)
class IntegrationResult:
    """Endpoint state of one integration run.

    ``error_estimate`` sums the per-step truncation tails; it is a
    heuristic accuracy indicator, not a certified bound.  ``defect`` is
    the forward-backward round-trip discrepancy when requested.
    """

    value: mpc
    slope: mpc
    t_end: mpc
    steps: int
    order: int
    error_estimate: mpf
    defect: Optional[mpf] = None
    trajectory: Optional[Tuple[Tuple[mpc, mpc], ...]] = None


#: Local truncation budget per step is tol**_LOCAL_EXPONENT; the
#: super-linear exponent makes the accumulated defect scale like
#: tol^(~2.4), so halving the tolerance reliably gains more than 4x.
_LOCAL_EXPONENT = Fraction(5, 2)

_STEP_SAFETY = Fraction(4, 5)
_MAX_STEP = Fraction(3, 4)


def _pick_order(tol: mpf) -> int:
    digits = float(-mp.log10(tol))
    return int(min(MAX_ORDER, max(MIN_ORDER, 2 * round(0.4 * digits))))


def _integrate_leg(
    g: mpc,
    g_prime: mpc,
    t_from: mpc,
    t_to: mpc,
    tol: mpf,
    order: int,
    collect: Optional[List[Tuple[mpc, mpc]]],
) -> Tuple[mpc, mpc, int, mpf]:
    """March from t_from to t_to along the straight segment.

    Assumes an mpmath working precision is already in force.  Raises
    :class:`PoleProximityError` on blowup.
    """
    local_budget = tol ** _to_mpf(_LOCAL_EXPONENT)
    safety = _to_mpf(_STEP_SAFETY)
    max_step = _to_mpf(_MAX_STEP)
    distance = abs(t_to - t_from)
    t = t_from
    steps = 0
    error_sum = mpf(0)
    if collect is not None:
        collect.append((t, g))
    if distance == 0:
        return g, g_prime, 0, error_sum
    direction = (t_to - t_from) / distance
    # Once the remaining distance is pure accumulation dust, stop.
    dust = distance * mpf(2) ** (-(mp.prec - 8))
    while True:
        remaining_vector = t_to - t
        remaining = abs(remaining_vector)
        if remaining <= dust:
            break
        if abs(g) > BLOWUP_THRESHOLD:
            raise PoleProximityError(t, g, g_prime)
        if steps >= _MAX_STEPS:
            raise RuntimeError(
                f"integration exceeded {_MAX_STEPS} steps "
                f"(t = {t}, target {t_to})"
            )
        coeffs = _taylor_raw(g, g_prime, t, order)
        scale = max(mpf(1), abs(coeffs[0]), abs(coeffs[1]))
        step = min(remaining, max_step)
        candidates = []
        for k in (order - 1, order):
            mag = abs(coeffs[k])
            if mag != 0:
                candidates.append((local_budget * scale / mag) ** (mpf(1) / k))
        if candidates:
            step = min(step, safety * min(candidates))
        if step <= 0 or step < remaining * mpf(2) ** (-(mp.prec // 2)):
            raise RuntimeError(
                f"step size collapsed at t = {t} without blowup"
            )
        if step >= remaining:
            s = remaining_vector
            step = remaining
        else:
            s = step * direction
        g_next = mpc(0)
        for ck in reversed(coeffs):
            g_next = g_next * s + ck
        gp_next = mpc(0)
        for k in range(order, 0, -1):
            gp_next = gp_next * s + k * coeffs[k]
        error_sum += abs(coeffs[order - 1]) * step ** (order - 1)
        error_sum += abs(coeffs[order]) * step**order
        g, g_prime = g_next, gp_next
        t = t + s
        steps += 1
        if collect is not None:
            collect.append((t, g))
    if abs(g) > BLOWUP_THRESHOLD:
        raise PoleProximityError(t, g, g_prime)
    return g, g_prime, steps, error_sum


def integrate(
    value: Number,
    slope: Number,
    t_start: Number,
    t_end: Number,
    tol: Number = DEFAULT_TOL,
    order: Optional[int] = None,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    report_defect: bool = False,
    keep_trajectory: bool = False,
) -> IntegrationResult:
    """Integrate  g'' = 6 g^2 + t  from t_start to t_end (straight path).

    Adaptive Taylor marching: at each state the local series is built to
    ``order`` (chosen in [16, 24] from the tolerance when not given) and
    the step is sized from the growth of the top coefficients so that
    the local truncation stays below tol**(5/2).  A trajectory value
    exceeding :data:`BLOWUP_THRESHOLD` raises
    :class:`PoleProximityError` carrying a double-pole location
    estimate.  With ``report_defect`` the path is re-integrated in
    reverse and the worst component of the round-trip discrepancy is
    reported.
    """
    _require_bits(precision_bits)
    with workprec(precision_bits + GUARD_BITS):
        tol_m = _to_mpf(tol)
        if not 0 < tol_m < 1:
            raise PreconditionError(f"tolerance must be in (0, 1), got {tol!r}")
        order_eff = (
            _pick_order(tol_m)
            if order is None
            else int(min(MAX_ORDER, max(MIN_ORDER, order)))
        )
        g0 = _to_mpc(value)
        gp0 = _to_mpc(slope)
        ta = _to_mpc(t_start)
        tb = _to_mpc(t_end)
        collect: Optional[List[Tuple[mpc, mpc]]] = [] if keep_trajectory else None
        g, gp, steps, err = _integrate_leg(g0, gp0, ta, tb, tol_m, order_eff, collect)
        defect = None
        if report_defect:
            gb, gpb, _, _ = _integrate_leg(g, gp, tb, ta, tol_m, order_eff, None)
            defect = max(abs(gb - g0), abs(gpb - gp0))
        return IntegrationResult(
            value=g,
            slope=gp,
            t_end=tb,
            steps=steps,
            order=order_eff,
            error_estimate=err,
            defect=defect,
            trajectory=tuple(collect) if collect is not None else None,
        )


# --------------------------------------------------------------------------
# pole location
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PoleEstimate:
    """A refined double-pole location found along one ray from t = 0.

    ``fit_residual`` compares the blowup radius implied by |g|^(-1/2)
    with the one implied by 2g/g'; both follow from the local model
    g ~ (t - t_p)^(-2), so a small residual certifies the fit quality
    (heuristically, not rigorously).
    """

    distance: mpf
    location: mpc
    direction: mpf
    fit_residual: mpf


@dataclass(frozen=True)
class PoleScan:
    """Minimum pole distance over a fan of directions from the origin."""

    best: PoleEstimate
    estimates: Tuple[PoleEstimate, ...]
    unbounded_directions: Tuple[mpf, ...]
    note: str


def pole_estimate(
    direction: Number = 0,
    horizon: Number = DEFAULT_HORIZON,
    tol: Number = Fraction(1, 10**10),
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> PoleEstimate:
    """Estimate the nearest pole of g along one ray from the origin.

    Integrates from the certified origin data (window centres) outward
    along  t = r * e^(i*direction)  until the trajectory exceeds
    :data:`BLOWUP_THRESHOLD`, then refines the pole location from the
    double-pole local behaviour  g ~ (t - t_p)^(-2)  via
    t_p = t + 2 g/g'.  Raises :class:`PoleNotFoundError` if the
    trajectory stays bounded out to ``horizon``.
    """
    _require_bits(precision_bits)
    with workprec(precision_bits + GUARD_BITS):
        theta = _to_mpf(direction)
        horizon_m = _to_mpf(horizon)
        if horizon_m <= 0:
            raise PreconditionError("horizon must be positive")
        tol_m = _to_mpf(tol)
        target = horizon_m * mpc(mp.cos(theta), mp.sin(theta))
        g0 = _to_mpc(inner.CENTER_VALUE)
        gp0 = _to_mpc(inner.CENTER_SLOPE)
        try:
            _integrate_leg(g0, gp0, mpc(0), target, tol_m, _pick_order(tol_m), None)
        except PoleProximityError as blowup:
            location = blowup.estimate
            radius_from_value = abs(blowup.value) ** (mpf(-1) / 2)
            radius_from_ratio = abs(blowup.t_last - location)
            fit_residual = abs(radius_from_value - radius_from_ratio) / radius_from_ratio
            return PoleEstimate(
                distance=abs(location),
                location=location,
                direction=theta,
                fit_residual=fit_residual,
            )
    raise PoleNotFoundError(direction, horizon)


def pole_scan(
    directions: Optional[Sequence[Number]] = None,
    horizon: Number = DEFAULT_HORIZON,
    tol: Number = Fraction(1, 10**10),
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> PoleScan:
    """Scan rays from the origin and report the smallest pole distance.

    The default fan covers the sector |arg t| <= 4*pi/25, interior to
    the only wedge (|arg t| < pi/5) where the certificates leave room
    for poles.  Which direction attains the minimum is not specified by
    the certified statements; the scan reports what it finds and labels
    it as a numerical interpretation.
    """
    _require_bits(precision_bits)
    if directions is None:
        with workprec(precision_bits + GUARD_BITS):
            directions = [mp.pi * k / 25 for k in range(-4, 5)]
    estimates: List[PoleEstimate] = []
    unbounded: List[mpf] = []
    for theta in directions:
        try:
            estimates.append(
                pole_estimate(theta, horizon, tol, precision_bits=precision_bits)
            )
        except PoleNotFoundError:
            unbounded.append(_to_mpf(theta))
    if not estimates:
        raise PoleNotFoundError("every scanned direction", horizon)
    best = min(estimates, key=lambda e: e.distance)
    return PoleScan(
        best=best,
        estimates=tuple(estimates),
        unbounded_directions=tuple(unbounded),
        note=(
            "minimum over sampled directions from the origin; the location "
            "of the nearest pole is a numerical estimate, not a certified "
            "statement"
        ),
    )


# --------------------------------------------------------------------------
# origin data and high-level evaluation
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroData:
    """Certified enclosures of the solution at the origin, both frames.

    The g-frame windows are exact rational intervals; the y-frame
    images are the rotated centres together with the (rotation-
    invariant) window radii.
    """

    value_window: Interval
    slope_window: Interval
    y_value: mpc
    y_value_radius: mpf
    y_slope: mpc
    y_slope_radius: mpf


_INNER_CERTIFIED: Optional[bool] = None


def _inner_certified() -> bool:
    global _INNER_CERTIFIED
    if _INNER_CERTIFIED is None:
        _INNER_CERTIFIED = all(c.passed for c in inner.certify())
    return _INNER_CERTIFIED


def y_at_zero(precision_bits: int = DEFAULT_PRECISION_BITS) -> ZeroData:
    """Certified enclosures of y(0) and y'(0).

    Requires the interior certificate to pass (it is run once and
    cached); the g-frame windows are its exact conclusion, and the
    y-frame images follow by the exact rotation between frames.
    """
    _require_bits(precision_bits)
    if not _inner_certified():
        raise PreconditionError(
            "the interior certificate failed; no enclosure at the origin"
        )
    value_window = Interval(
        inner.CENTER_VALUE - inner.VALUE_WINDOW,
        inner.CENTER_VALUE + inner.VALUE_WINDOW,
    )
    slope_window = Interval(
        inner.CENTER_SLOPE - inner.SLOPE_WINDOW,
        inner.CENTER_SLOPE + inner.SLOPE_WINDOW,
    )
    with workprec(precision_bits + GUARD_BITS):
        y_value = _fifth_root_of_unity_power(-2) * _to_mpf(inner.CENTER_VALUE)
        y_slope = -_fifth_root_of_unity_power(-3) * _to_mpf(inner.CENTER_SLOPE)
        return ZeroData(
            value_window=value_window,
            slope_window=slope_window,
            y_value=y_value,
            y_value_radius=_to_mpf(inner.VALUE_WINDOW),
            y_slope=y_slope,
            y_slope_radius=_to_mpf(inner.SLOPE_WINDOW),
        )


@dataclass(frozen=True)
class Evaluation:
    """Outcome of :func:`evaluate_point`.

    ``rigorous`` is True exactly when ``error_bound`` is a certified
    radius (origin window or asymptotic ball); otherwise
    ``error_estimate`` is the integrator's heuristic tail sum and the
    value is a consistency estimate.
    """

    z: mpc
    y: Optional[mpc]
    y_prime: Optional[mpc]
    method: str
    rigorous: bool
    error_bound: Optional[mpf] = None
    slope_error_bound: Optional[mpf] = None
    error_estimate: Optional[mpf] = None
    warning: Optional[str] = None


def evaluate_point(
    z: Number,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    tol: Number = DEFAULT_TOL,
) -> Evaluation:
    """Evaluate the solution at one point, choosing the best method.

    Preference order: the certified origin window at z = 0; a certified
    asymptotic representation when z lies in one of the asymptotic
    regions; otherwise numerical integration in the t frame from the
    origin window centres (flagged non-rigorous).  A trajectory that
    blows up before reaching the target returns no value but carries
    the pole-location estimate in the warning.
    """
    _require_bits(precision_bits)
    with workprec(precision_bits + GUARD_BITS):
        zv = _to_mpc(z)
    if zv == 0:
        data = y_at_zero(precision_bits)
        return Evaluation(
            z=zv,
            y=data.y_value,
            y_prime=data.y_slope,
            method="origin-enclosure",
            rigorous=True,
            error_bound=data.y_value_radius,
            slope_error_bound=data.y_slope_radius,
        )
    for region in ASYMPTOTIC_REGIONS:
        try:
            asym = asymptotic_y(zv, region, precision_bits)
        except PreconditionError:
            continue
        return Evaluation(
            z=zv,
            y=asym.value,
            y_prime=None,
            method=f"asymptotic-{region}",
            rigorous=True,
            error_bound=asym.error,
        )
    point = frame_map(zv, "z", precision_bits)
    with workprec(precision_bits + GUARD_BITS):
        warning = None
        wedge = abs(mp.arg(point.t)) < mp.pi / 5 + _ARG_SLACK
        if wedge and abs(point.t) > mpf(37) / 20:
            warning = (
                "target lies outside the certified disk in the only sector "
                "that can contain poles; treat the value as an estimate"
            )
    try:
        run = integrate(
            inner.CENTER_VALUE,
            inner.CENTER_SLOPE,
            0,
            point.t,
            tol=tol,
            precision_bits=precision_bits,
        )
    except PoleProximityError as blowup:
        return Evaluation(
            z=zv,
            y=None,
            y_prime=None,
            method="integration",
            rigorous=False,
            warning=(
                "trajectory blew up before reaching the target; "
                f"double-pole estimate t_p ~= {blowup.estimate}"
            ),
        )
    y_val, y_slope = y_from_g(run.value, run.slope, precision_bits)
    return Evaluation(
        z=zv,
        y=y_val,
        y_prime=y_slope,
        method="integration",
        rigorous=False,
        error_estimate=run.error_estimate,
        warning=warning,
    )


# --------------------------------------------------------------------------
# CSV export
# --------------------------------------------------------------------------


_CSV_DIGITS = 24


def _csv_number(x: mpf) -> str:
    return mp.nstr(x, _CSV_DIGITS)


def _csv_complex_axis(t: mpc) -> str:
    if t.imag == 0:
        return _csv_number(t.real)
    sign = "+" if t.imag > 0 else "-"
    return f"{_csv_number(t.real)}{sign}{_csv_number(abs(t.imag))}i"


def series_csv(coeffs: Sequence[Number]) -> str:
    """Render Taylor coefficients as CSV rows  (k, Re c_k, Im c_k)."""
    lines = ["k,re_ck,im_ck"]
    for k, c in enumerate(coeffs):
        cv = _to_mpc(c)
        lines.append(f"{k},{_csv_number(cv.real)},{_csv_number(cv.imag)}")
    return "\n".join(lines) + "\n"


def trajectory_csv(trajectory: Sequence[Tuple[mpc, mpc]]) -> str:
    """Render an integration trajectory as CSV rows  (t, Re g, Im g).

    The t column is the real coordinate for paths on the real axis; a
    point off the axis is rendered as  a+bi  in the same column.
    """
    lines = ["t,re_g,im_g"]
    for t, g in trajectory:
        tv = _to_mpc(t)
        gv = _to_mpc(g)
        lines.append(
            f"{_csv_complex_axis(tv)},{_csv_number(gv.real)},{_csv_number(gv.imag)}"
        )
    return "\n".join(lines) + "\n"
