"""Sampling X(t, theta) = (t cos theta, t sin theta, f(t)) and export.

Meshes are annulus grids of n_t rings by n_theta spokes with the theta
seam closed by index wraparound (no duplicated seam column), quads split
into triangles along a fixed diagonal, wound counterclockwise as seen from
+x3.  A window starting at t = 0 replaces the innermost ring with a single
apex vertex at the axis height and fans triangles to it.

Exports: Wavefront OBJ (ASCII, v/f records only) and RFC-4180 CSV profile
polylines with columns t, f, f_prime, first_integral_residual.  Both are
bit-stable for identical inputs.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonPositiveRadius, SpacelikeViolation
from .profile import (
    ProfileCurve,
    first_integral_residual,
    heights,
    singularity_report,
)

__all__ = [
    "SurfaceMesh",
    "euler_characteristic",
    "export_obj",
    "export_profile_csv",
    "load_obj",
    "sample_surface",
]


@dataclass
class SurfaceMesh:
    """Triangulated sample of a surface of revolution."""

    vertices: np.ndarray  # (n_vertices, 3)
    faces: np.ndarray  # (n_faces, 3) int, counterclockwise from +x3
    ring_radii: np.ndarray
    n_theta: int
    singular_vertex: int | None = None
    metadata: dict = field(default_factory=dict)


def sample_surface(curve: ProfileCurve, t_range, n_t, n_theta,
                   spacing="uniform") -> SurfaceMesh:
    """Sample the immersion on an (n_t x n_theta) grid over ``t_range``.

    ``t_range = (t_lo, t_hi)`` with 0 <= t_lo < t_hi; t_lo = 0 produces an
    apex vertex at the axis instead of a degenerate ring (flagged in
    ``singular_vertex``).  ``spacing`` is "uniform" or "log" in t; theta is
    always uniform.
    """
    t_lo, t_hi = float(t_range[0]), float(t_range[1])
    if t_lo < 0.0 or not t_lo < t_hi:
        raise ValueError(f"need 0 <= t_lo < t_hi, got ({t_lo}, {t_hi})")
    if n_t < 2:
        raise ValueError("need at least 2 rings")
    if n_theta < 3:
        raise ValueError("need at least 3 spokes")

    if spacing == "uniform":
        ts = np.linspace(t_lo, t_hi, n_t)
    elif spacing == "log":
        if t_lo <= 0.0:
            raise NonPositiveRadius("log spacing requires t_lo > 0")
        ts = np.geomspace(t_lo, t_hi, n_t)
    else:
        raise ValueError(f"unknown spacing {spacing!r}")

    apex = ts[0] == 0.0
    ring_ts = ts[1:] if apex else ts
    ring_hs = heights(curve, ring_ts)

    thetas = np.linspace(0.0, 2.0 * math.pi, n_theta, endpoint=False)
    cos_t, sin_t = np.cos(thetas), np.sin(thetas)

    n_rings = ring_ts.size
    ring_grid = np.empty((n_rings, n_theta, 3))
    ring_grid[:, :, 0] = ring_ts[:, None] * cos_t[None, :]
    ring_grid[:, :, 1] = ring_ts[:, None] * sin_t[None, :]
    ring_grid[:, :, 2] = ring_hs[:, None]

    singular_vertex = None
    if apex:
        vertex0 = np.array([[0.0, 0.0, singularity_report(curve).cone_vertex_height]])
        vertices = np.vstack([vertex0, ring_grid.reshape(-1, 3)])
        offset = 1
        singular_vertex = 0
    else:
        vertices = ring_grid.reshape(-1, 3)
        offset = 0

    def vid(i, j):
        return offset + i * n_theta + (j % n_theta)

    faces = []
    if apex:
        # fan from the apex to the first ring, wound so normals lean +x3
        for j in range(n_theta):
            faces.append((0, vid(0, j), vid(0, j + 1)))
    for i in range(n_rings - 1):
        for j in range(n_theta):
            v00 = vid(i, j)
            v10 = vid(i + 1, j)
            v11 = vid(i + 1, j + 1)
            v01 = vid(i, j + 1)
            faces.append((v00, v10, v11))
            faces.append((v00, v11, v01))

    return SurfaceMesh(
        vertices=vertices,
        faces=np.asarray(faces, dtype=np.int64),
        ring_radii=ring_ts,
        n_theta=n_theta,
        singular_vertex=singular_vertex,
        metadata={
            "H": curve.mean_curvature,
            "c": curve.first_integral,
            "regime": curve.regime.value,
            "anchor": (curve.anchor_radius, curve.anchor_height),
            "t_range": (t_lo, t_hi),
            "spacing": spacing,
        },
    )


def export_obj(mesh: SurfaceMesh) -> bytes:
    """Serialize as ASCII Wavefront OBJ with v and f records only.

    Floats are written with shortest round-trip repr, so identical meshes
    serialize to identical bytes.
    """
    out = io.StringIO()
    for x, y, z in mesh.vertices:
        out.write(f"v {float(x)!r} {float(y)!r} {float(z)!r}\n")
    for i, j, k in mesh.faces:
        out.write(f"f {i + 1} {j + 1} {k + 1}\n")
    return out.getvalue().encode("ascii")


def load_obj(data) -> tuple[np.ndarray, np.ndarray]:
    """Parse v/f records from OBJ bytes or text; returns (vertices, faces)."""
    if isinstance(data, bytes):
        data = data.decode("ascii")
    vertices, faces = [], []
    for line in data.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "v":
            vertices.append([float(p) for p in parts[1:4]])
        elif parts[0] == "f":
            faces.append([int(p.split("/")[0]) - 1 for p in parts[1:4]])
    return np.asarray(vertices, dtype=float), np.asarray(faces, dtype=np.int64)


def euler_characteristic(mesh: SurfaceMesh) -> int:
    """V - E + F with edges counted once; 0 for a closed-seam annulus."""
    edges = set()
    for i, j, k in mesh.faces:
        for a, b in ((i, j), (j, k), (k, i)):
            edges.add((min(a, b), max(a, b)))
    return int(mesh.vertices.shape[0]) - len(edges) + int(mesh.faces.shape[0])


def export_profile_csv(curve: ProfileCurve, ts) -> bytes:
    """Profile polyline as RFC-4180 CSV: t, f, f_prime, first_integral_residual.

    A sample at t = 0 is written with the limiting values from the
    singularity report (axis height, limiting slope, zero residual); all
    other samples must be positive.  So close to a conical point that the
    residual cannot be finite-differenced in float64, its column is nan.
    """
    ts = np.asarray(ts, dtype=float)
    if np.any(ts < 0.0):
        raise NonPositiveRadius("profile samples must satisfy t >= 0")
    pos = ts > 0.0
    hs = np.empty(ts.shape)
    hs[pos] = heights(curve, ts[pos])
    sl = np.empty(ts.shape)
    sl[pos] = curve.slopes(ts[pos])
    report = singularity_report(curve) if np.any(~pos) else None
    out = io.StringIO()
    out.write("t,f,f_prime,first_integral_residual\r\n")
    for i, t in enumerate(ts):
        if t == 0.0:
            row = (0.0, report.cone_vertex_height, report.limit_slope, 0.0)
        else:
            # clamp the differencing step so rows near the axis stay valid
            step = min(1e-5 * max(1.0, float(t)), 0.5 * float(t))
            try:
                residual = first_integral_residual(t, curve, fd_step=step)
            except SpacelikeViolation:
                residual = math.nan
            row = (t, hs[i], sl[i], residual)
        out.write(",".join(repr(float(v)) for v in row) + "\r\n")
    return out.getvalue().encode("ascii")
