"""Two-ring Plateau problem: shoot on the first-integral constant.

For fixed H >= 0 and anchor f(r) = a, the outer height f(R; H, c) is a
strictly decreasing function of c (the slope formula is strictly decreasing
in c at every radius) sweeping the open band (a - (R - r), a + (R - r)) as
c runs from +inf to -inf.  Any admissible target b therefore has exactly
one root, and sign-safe bisection with geometric bracket expansion finds it
without any smoothness assumptions.  The map is cheap, so robustness beats
speed here.

The threshold H0 is the mean curvature of the hyperbolic cap through both
rings; for rising boundary data it splits the solutions three ways:
H < H0 gives c < 0 (profile rises monotonically), H = H0 gives the cap
itself (c = 0), H > H0 gives c > 0 (convex profile dipping below the
boundary planes once sqrt(c/H) falls inside (r, R)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    Regime,
    RingPair,
    SurfaceParams,
    ValidatedRingPair,
    classify_params,
    validate_rings,
)
from .errors import OrientationError, RootBracketFailure, LorentzCMCError
from .profile import (
    DEFAULT_MAX_INTERVALS,
    DEFAULT_QUAD_TOL,
    ProfileCurve,
    _slope_raw,
    profile_curve,
)
from .quadrature import integrate

__all__ = [
    "DEFAULT_ROOT_TOL",
    "DEFAULT_C_TOL",
    "PlateauProblem",
    "PlateauSolution",
    "classify",
    "solve_c",
    "solve_two_ring",
    "threshold_H0",
]

DEFAULT_ROOT_TOL = 1e-9
DEFAULT_C_TOL = 1e-12
_BRACKET_LIMIT = 1e15


@dataclass(frozen=True)
class PlateauProblem:
    """Validated rings plus the prescribed mean curvature H >= 0."""

    rings: ValidatedRingPair
    H: float
    root_tol: float = DEFAULT_ROOT_TOL
    c_tol: float = DEFAULT_C_TOL
    quad_tol: float = DEFAULT_QUAD_TOL

    def __post_init__(self):
        if not isinstance(self.rings, ValidatedRingPair):
            raise TypeError("rings must pass validate_rings first")
        if not math.isfinite(self.H) or self.H < 0.0:
            raise ValueError(
                f"H must be finite and >= 0 (canonicalize first), got {self.H}"
            )


@dataclass(frozen=True)
class PlateauSolution:
    """Solved curve, its first-integral constant, regime, and diagnostics.

    ``c`` and ``regime`` describe the canonical (H >= 0) representative,
    i.e. ``curve.params``; for descending boundary data (b < a) the curve
    carries parity -1 and ``curve.first_integral`` gives the as-built sign.
    ``H0`` is the cap threshold of the ascending orientation of the rings.
    """

    curve: ProfileCurve
    c: float
    regime: Regime
    H0: float
    residual: float


def threshold_H0(rings: ValidatedRingPair):
    """Mean curvature of the hyperbolic cap through both rings.

        H0 = 2 (b - a) / sqrt(((R-r)^2 - (b-a)^2) ((R+r)^2 - (b-a)^2))

    Requires b >= a (reflect heights first otherwise); H0 = 0 iff a = b.
    """
    d = rings.b - rings.a
    if d < 0.0:
        raise OrientationError(
            f"threshold needs b >= a, got a={rings.a}, b={rings.b}; "
            "reflect heights first"
        )
    if d == 0.0:
        return 0.0
    dr = rings.R - rings.r
    sr = rings.R + rings.r
    return 2.0 * d / math.sqrt((dr * dr - d * d) * (sr * sr - d * d))


def classify(H, rings: ValidatedRingPair) -> Regime:
    """Predict the solution regime from (H, H0) without solving.

    Requires b >= a.  Consistency with solve_c is a tested property of the
    solver, not an assumption of this function.
    """
    if H < 0.0:
        raise ValueError(f"H must be >= 0 (canonicalize first), got {H}")
    if rings.b < rings.a:
        raise OrientationError("classification needs b >= a; reflect heights first")
    if H == 0.0:
        return Regime.PLANE if rings.a == rings.b else Regime.MAXIMAL_CATENOID
    h0 = threshold_H0(rings)
    if H < h0:
        return Regime.NEGATIVE_C
    if H == h0:
        return Regime.HYPERBOLIC_CAP
    return Regime.POSITIVE_C


def _outer_height(H, c, rings, quad_tol):
    """f(R; H, c) anchored at f(r) = a, by quadrature."""
    val = integrate(
        lambda s: _slope_raw(s, H, c),
        rings.r,
        rings.R,
        tol=quad_tol,
        max_intervals=DEFAULT_MAX_INTERVALS,
    )
    return rings.a + val


def solve_c(problem: PlateauProblem) -> PlateauSolution:
    """Find c with f(R; H, c) = b and package the solved profile.

    Descending data (b < a) is solved through the mirror (a, b) ->
    (-a, -b) and un-reflected via the curve's parity.  Roots with
    |c| < 1e-10 * max(1, H R^2) are snapped to exactly 0 (the regime split
    is discontinuous there in floating point) whenever the snapped profile
    still meets the outer ring within root_tol.
    """
    rings = problem.rings
    H = problem.H
    reflected = rings.b < rings.a
    work = rings if not reflected else ValidatedRingPair(
        r=rings.r, R=rings.R, a=-rings.a, b=-rings.b, slope_bound=rings.slope_bound
    )

    def g(c):
        return _outer_height(H, c, work, problem.quad_tol) - work.b

    # g is strictly decreasing with g(-inf) > 0 > g(+inf); expand until the
    # signs confirm it.
    lo, hi = -1.0, 1.0
    g_lo, g_hi = g(lo), g(hi)
    while g_lo < 0.0:
        lo *= 2.0
        if abs(lo) > _BRACKET_LIMIT:
            raise RootBracketFailure(f"no sign change down to c={lo}")
        g_lo = g(lo)
    while g_hi > 0.0:
        hi *= 2.0
        if hi > _BRACKET_LIMIT:
            raise RootBracketFailure(f"no sign change up to c={hi}")
        g_hi = g(hi)

    if g_lo == 0.0:
        c_hat = lo
    elif g_hi == 0.0:
        c_hat = hi
    else:
        while hi - lo > problem.c_tol:
            mid = 0.5 * (lo + hi)
            if not (lo < mid < hi):
                break
            g_mid = g(mid)
            if g_mid > 0.0:
                lo = mid
            elif g_mid < 0.0:
                hi = mid
            else:
                lo = hi = mid
        c_hat = 0.5 * (lo + hi)

    snap = 1e-10 * max(1.0, H * work.R * work.R)
    if c_hat != 0.0 and abs(c_hat) < snap:
        if abs(g(0.0)) <= problem.root_tol:
            c_hat = 0.0

    residual = abs(g(c_hat))
    if residual > problem.root_tol:
        raise LorentzCMCError(
            f"shooting residual {residual:.3e} exceeds root_tol "
            f"{problem.root_tol:.3e}; quad_tol may be too loose for this target"
        )

    if reflected:
        user_params = SurfaceParams(-H, -c_hat)
    else:
        user_params = SurfaceParams(H, c_hat)
    curve = profile_curve(user_params, (rings.r, rings.a),
                          quad_tol=problem.quad_tol)
    return PlateauSolution(
        curve=curve,
        c=curve.params.c,
        regime=classify_params(curve.params),
        H0=threshold_H0(work),
        residual=residual,
    )


def solve_two_ring(r, R, a, b, H, root_tol=DEFAULT_ROOT_TOL,
                   c_tol=DEFAULT_C_TOL, quad_tol=DEFAULT_QUAD_TOL) -> PlateauSolution:
    """Validate raw ring data and solve in one call."""
    rings = validate_rings(RingPair(r=r, R=R, a=a, b=b))
    problem = PlateauProblem(rings=rings, H=H, root_tol=root_tol,
                             c_tol=c_tol, quad_tol=quad_tol)
    return solve_c(problem)
