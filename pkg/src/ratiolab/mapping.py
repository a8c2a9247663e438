"""Datasets over the w-plane and the rays, plus the inellipse oracle.

The midpoint inellipse of a noncollinear root triangle is fitted purely
geometrically: six homogeneous linear constraints (the conic passes through
each side midpoint and its gradient there is parallel to the side normal)
determine the conic coefficients up to scale; center, axes, and foci come
from the 3x3 conic matrix. The foci independently reproduce the critical
points, which is what makes this an oracle for the ratio machinery rather
than a restatement of it.

Naming note: the excluded vertical rays {Re w = 0, |Im w| >= sqrt(3)} in the
w-plane and the inellipse of a root triangle are unrelated objects; code and
docs say "excluded rays" and "inellipse" to keep them apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .cubic import Configuration, OrderedCubic
from .errors import BadRangeError, DegenerateTriangleError
from .kernel import DEFAULT_TOL, SQRT3, ToleranceConfig
from .ratios import (
    REMOVABLE_RADIUS,
    RatioPath,
    RatioVector,
    boundary_sigma1,
    f_extension,
    g_extension,
)
from .records import CSV_COLUMNS, SampleRecord, csv_row, jsonl_line
from .theorems import check_bounds

__all__ = [
    "InEllipse",
    "SampleRecord",
    "sweep_w_grid",
    "trace_boundary",
    "steiner_inellipse",
    "ratio_angles",
    "emit_dataset",
    "is_reachable",
]


@dataclass(frozen=True)
class InEllipse:
    """Midpoint inellipse: tangent to the triangle at all three side midpoints."""

    center: complex
    focus1: complex
    focus2: complex
    semi_major: float
    semi_minor: float
    tangency_points: tuple[complex, complex, complex]


def is_reachable(w: complex, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether some admissible pair realizes this w.

    Solvability of the ordering constraints reduces to: any w off the real
    axis works, and a real w needs |Re w| < 1 (w = w2/w3 with |Re w2| < Re w3).
    """
    if abs(w.imag) > tol.eq_tol:
        return True
    return abs(w.real) < 1.0 - tol.eq_tol


def _on_rays(w: complex, tol: ToleranceConfig) -> bool:
    return abs(w.real) <= tol.boundary_tol and abs(w.imag) >= SQRT3 - tol.boundary_tol


def _classify_w(w: complex, tol: ToleranceConfig) -> str:
    if (
        abs(w - SQRT3 * 1j) <= tol.eq_tol
        or abs(w + SQRT3 * 1j) <= tol.eq_tol
    ):
        return Configuration.EQUILATERAL.value
    if abs(w.imag) <= tol.eq_tol:
        return Configuration.COLLINEAR.value
    return Configuration.GENERIC.value


def _bounds_ok(s1: complex, s2: complex, tol: ToleranceConfig) -> bool:
    rv = RatioVector(s1, s2, RatioPath.INTERIOR)
    return all(rep.passed for rep in check_bounds(rv, tol))


def sweep_w_grid(
    re_range: tuple[float, float],
    im_range: tuple[float, float],
    resolution: int,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> list[SampleRecord]:
    """Evaluate f and g on a rectangular grid; ray points get a skip marker.

    Grid order is row-major: Re w varies in the outer loop, Im w in the
    inner one, both ascending.
    """
    re_lo, re_hi = float(re_range[0]), float(re_range[1])
    im_lo, im_hi = float(im_range[0]), float(im_range[1])
    if not (math.isfinite(re_lo) and math.isfinite(re_hi) and re_lo < re_hi):
        raise BadRangeError(f"bad re_range {re_range!r}")
    if not (math.isfinite(im_lo) and math.isfinite(im_hi) and im_lo < im_hi):
        raise BadRangeError(f"bad im_range {im_range!r}")
    if resolution < 2:
        raise BadRangeError("resolution must be at least 2")

    records: list[SampleRecord] = []
    for re_w in np.linspace(re_lo, re_hi, resolution):
        for im_w in np.linspace(im_lo, im_hi, resolution):
            w = complex(re_w, im_w)
            reachable = is_reachable(w, tol)
            if _on_rays(w, tol):
                records.append(
                    SampleRecord(w, None, None, "skip", _classify_w(w, tol), reachable, None)
                )
                continue
            path = "interior"
            if abs(w - 1.0) < REMOVABLE_RADIUS or abs(w + 1.0) < REMOVABLE_RADIUS:
                path = "extension"
            s1 = f_extension(w, tol)
            s2 = g_extension(w, tol)
            records.append(
                SampleRecord(
                    w, s1, s2, path, _classify_w(w, tol), reachable, _bounds_ok(s1, s2, tol)
                )
            )
    return records


def trace_boundary(
    t_min: float,
    t_max: float,
    steps: int,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> list[SampleRecord]:
    """Sample the rays at w = i t for t in -[t_max, t_min] and [t_min, t_max].

    Uses the upper-side ray formula for sigma1 and the identity
    (1 - sigma1) sigma2 = 1/3 for sigma2; t ascends through both blocks.
    """
    if not (SQRT3 - tol.eq_tol <= t_min < t_max):
        raise BadRangeError(f"need sqrt(3) <= t_min < t_max, got [{t_min}, {t_max}]")
    if steps < 2:
        raise BadRangeError("steps must be at least 2")
    ts = np.concatenate(
        [-np.linspace(t_max, t_min, steps), np.linspace(t_min, t_max, steps)]
    )
    records = []
    for t in ts:
        s1 = boundary_sigma1(float(t), tol)
        s2 = 1.0 / (3.0 * (1.0 - s1))
        cls = (
            Configuration.EQUILATERAL.value
            if abs(abs(t) - SQRT3) <= tol.eq_tol
            else Configuration.GENERIC.value
        )
        records.append(
            SampleRecord(
                complex(0.0, float(t)), s1, s2, "boundary", cls, True,
                _bounds_ok(s1, s2, tol),
            )
        )
    return records


def steiner_inellipse(c: OrderedCubic, tol: ToleranceConfig = DEFAULT_TOL) -> InEllipse:
    """Fit the midpoint inellipse of the root triangle (geometric route).

    Raises DegenerateTriangleError when the triangle area is below
    eq_tol * diameter^2. The returned foci are sorted by real part (then
    imaginary part) to match the critical point labeling convention.
    """
    verts = [c.w1, c.w2, c.w3]
    diam = max(abs(c.w1 - c.w2), abs(c.w1 - c.w3), abs(c.w2 - c.w3))
    area = abs(((c.w2 - c.w1) * (c.w3 - c.w1).conjugate()).imag) / 2.0
    if area <= tol.eq_tol * diam * diam:
        raise DegenerateTriangleError("triangle is numerically collinear")

    ctr = (c.w1 + c.w2 + c.w3) / 3.0
    scale = max(abs(v - ctr) for v in verts)
    vs = [(v - ctr) / scale for v in verts]

    rows = []
    midpoints = []
    for k in range(3):
        p = vs[k]
        q = vs[(k + 1) % 3]
        m = (p + q) / 2.0
        midpoints.append(m)
        d = q - p
        x, y = m.real, m.imag
        dx, dy = d.real, d.imag
        rows.append([x * x, x * y, y * y, x, y, 1.0])
        rows.append([2.0 * x * dx, y * dx + x * dy, 2.0 * y * dy, dx, dy, 0.0])
    _, _, vt = np.linalg.svd(np.array(rows))
    A, B, C, D, E, F = vt[-1]

    q2 = np.array([[A, B / 2.0], [B / 2.0, C]])
    try:
        cen = np.linalg.solve(q2, [-D / 2.0, -E / 2.0])
    except np.linalg.LinAlgError as exc:
        raise DegenerateTriangleError("conic has no center") from exc
    k0 = F + (D / 2.0) * cen[0] + (E / 2.0) * cen[1]
    evals, evecs = np.linalg.eigh(q2)
    with np.errstate(divide="ignore", invalid="ignore"):
        ax2 = -k0 / evals
    if not np.all(np.isfinite(ax2)) or np.any(ax2 <= 0.0):
        raise DegenerateTriangleError("fitted conic is not an ellipse")
    order = np.argsort(ax2)[::-1]
    semi_major = math.sqrt(float(ax2[order[0]]))
    semi_minor = math.sqrt(float(ax2[order[1]]))
    major_dir = complex(evecs[0, order[0]], evecs[1, order[0]])
    focal = math.sqrt(max(semi_major**2 - semi_minor**2, 0.0))

    center = ctr + scale * complex(cen[0], cen[1])
    fa = center + scale * focal * major_dir
    fb = center - scale * focal * major_dir
    f1, f2 = sorted((fa, fb), key=lambda z: (z.real, z.imag))
    tangency = tuple(ctr + scale * m for m in midpoints)
    return InEllipse(
        center=center,
        focus1=f1,
        focus2=f2,
        semi_major=semi_major * scale,
        semi_minor=semi_minor * scale,
        tangency_points=tangency,
    )


def ratio_angles(c: OrderedCubic) -> tuple[float, float]:
    """Signed angles (radians) at w1 from side w1->w2 to w1->z1, and at w2
    from side w2->w3 to w2->z2. Computed from dot/cross products; equal to
    (arg sigma1, arg sigma2)."""
    u1 = c.w2 - c.w1
    v1 = c.z1 - c.w1
    u2 = c.w3 - c.w2
    v2 = c.z2 - c.w2
    th1 = math.atan2(
        u1.real * v1.imag - u1.imag * v1.real, u1.real * v1.real + u1.imag * v1.imag
    )
    th2 = math.atan2(
        u2.real * v2.imag - u2.imag * v2.real, u2.real * v2.real + u2.imag * v2.imag
    )
    return th1, th2


def emit_dataset(
    records: Iterable[SampleRecord],
    destination,
    fmt: str = "csv",
) -> int:
    """Write records as CSV (with header) or JSONL; returns the row count.

    Floats carry 17 significant digits so a reader recovers them exactly.
    """
    fmt = fmt.lower()
    if fmt not in ("csv", "jsonl"):
        raise BadRangeError(f"format must be csv or jsonl, got {fmt!r}")
    count = 0
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        if fmt == "csv":
            fh.write(",".join(CSV_COLUMNS) + "\n")
            for rec in records:
                fh.write(",".join(csv_row(rec)) + "\n")
                count += 1
        else:
            for rec in records:
                fh.write(jsonl_line(rec) + "\n")
                count += 1
    return count
