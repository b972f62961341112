"""Tour of the rotational profile families f(t; H, c).

Every spacelike surface of revolution with constant mean curvature H about
the timelike axis is pinned down by the conserved quantity

    H t^2 - t f'(t) / sqrt(1 - f'(t)^2) = c,

so the whole zoo is a two-parameter family.  This script walks the five
regimes and prints the numbers that characterize each one.
"""

import numpy as np

from lorentz_cmc import (
    SurfaceParams,
    classify_params,
    profile_curve,
    singularity_report,
    slope,
    slope_extremum_radius,
)

CASES = [
    ("plane", 0.0, 0.0),
    ("maximal catenoid, falling branch", 0.0, 3.0),
    ("maximal catenoid, rising branch", 0.0, -3.0),
    ("hyperbolic cap", 1.0, 0.0),
    ("rising CMC profile", 1.0, -3.0),
    ("convex dipping CMC profile", 1.0, 3.0),
]

print("=== regime classification ===")
for name, H, c in CASES:
    regime = classify_params(SurfaceParams(H, c))
    print(f"  (H={H:+.1f}, c={c:+.1f})  {regime.value:<16}  {name}")

print()
print("=== profiles through f(1) = 0 ===")
ts = np.array([0.25, 0.5, 1.0, 2.0, 4.0])
header = "  ".join(f"f({t:g})".rjust(9) for t in ts)
print(f"  {'case':<34} {header}")
for name, H, c in CASES:
    curve = profile_curve(SurfaceParams(H, c), (1.0, 0.0))
    vals = "  ".join(f"{curve.height(float(t)):+9.4f}" for t in ts)
    print(f"  {name:<34} {vals}")

print()
print("=== behavior at the axis and at infinity ===")
for name, H, c in CASES:
    curve = profile_curve(SurfaceParams(H, c), (1.0, 0.0))
    rep = singularity_report(curve)
    star = slope_extremum_radius(curve.params)
    asym = 1.0 if H > 0 else 0.0
    extremum = f"slope extremum at t={star:.4f}" if star else "slope monotone"
    print(f"  {name:<34} axis: {rep.kind.value:<18} f(0+)={rep.cone_vertex_height:+.4f}  "
          f"f'(0+)={rep.limit_slope:+.0f}  f/t->{asym:.0f}  {extremum}")

print()
print("=== the slope never reaches the light cone ===")
params = SurfaceParams(1.0, 3.0)
for t in (1e-6, 1e-3, 1.0, 1e3, 1e6):
    print(f"  |f'({t:g})| = {abs(slope(t, params)):.12f}  < 1")
