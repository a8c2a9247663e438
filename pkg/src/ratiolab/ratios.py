"""Ratio vectors: direct definition, closed forms in w, boundary formulas.

For an ordered cubic the ratio vector is

    sigma1 = (z1 - w1) / (w2 - w1),   sigma2 = (z2 - w2) / (w3 - w2)

and always satisfies (1 - sigma1) * sigma2 = 1/3. On admissible interior
configurations the ratios are functions of w = w2/w3 alone:

    f(w) = (w + 3 - sqrt(3 + w^2)) / (3 (w + 1)),   f(-1) = 1/2
    g(w) = (-2 w + sqrt(3 + w^2)) / (3 (1 - w)),    g(1)  = 1/2

f and g extend analytically to the whole plane minus the excluded rays
E = {Re w = 0, |Im w| >= sqrt(3)}, where sqrt(3 + w^2) crosses the branch
cut. On the rays themselves (w = i t, |t| >= sqrt(3)) the ratio is given by
a one-sided limit that depends on the sign of Im w3:

    sigma1 = (i t + i sqrt(t^2 - 3) + 3) / (3 (i t + 1))     Im w3 > 0
    sigma1 = conj of the value at -t                          Im w3 < 0

with real/imaginary parts u1(t), v1(t) (and u2, v2 for the mirror side).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .cubic import AdmissibilityReport, NormalizedCubic, OrderedCubic
from .errors import BadParameterError, NotAdmissibleError, OutsideDomainError
from .kernel import DEFAULT_TOL, SQRT3, ToleranceConfig, principal_sqrt, require_finite

__all__ = [
    "RatioPath",
    "RatioVector",
    "BoundaryPoint",
    "REMOVABLE_RADIUS",
    "ratios_direct",
    "f_extension",
    "g_extension",
    "boundary_sigma1",
    "boundary_sigma2",
    "boundary_uv",
    "boundary_modulus_sq",
    "boundary_sigma_diff",
    "identity_residual",
    "ratios_via_w",
]

#: Inside this distance of w = -1 (for f) or w = +1 (for g) the closed form
#: is a 0/0 limit; the extensions return the constant 1/2 there.
REMOVABLE_RADIUS = 1e-7


class RatioPath(enum.Enum):
    DIRECT = "direct"
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    COINCIDENT = "coincident"


@dataclass(frozen=True)
class RatioVector:
    """The pair (sigma1, sigma2) plus the formula that produced it."""

    sigma1: complex
    sigma2: complex
    path: RatioPath


@dataclass(frozen=True)
class BoundaryPoint:
    """Parameter of a point w = i t on the excluded rays, |t| >= sqrt(3)."""

    t: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.t) or abs(self.t) < SQRT3 - DEFAULT_TOL.eq_tol:
            raise BadParameterError(f"boundary parameter needs |t| >= sqrt(3), got {self.t!r}")


def ratios_direct(c: OrderedCubic) -> RatioVector:
    """Ratio vector straight from the definition on the labeled critical points."""
    s1 = (c.z1 - c.w1) / (c.w2 - c.w1)
    s2 = (c.z2 - c.w2) / (c.w3 - c.w2)
    return RatioVector(s1, s2, RatioPath.COINCIDENT if c.coincident else RatioPath.DIRECT)


def _check_domain(w: complex, tol: ToleranceConfig) -> complex:
    """Return 3 + w^2, rejecting w on/near the open part of the excluded rays.

    The ray tips +-i*sqrt(3) map to 3 + w^2 = 0 where the principal root is
    continuous, so they evaluate fine; only the open rays are rejected.
    """
    d = 3.0 + w * w
    if abs(d.imag) <= tol.boundary_tol and d.real <= tol.boundary_tol and abs(d) > tol.boundary_tol:
        raise OutsideDomainError(
            f"w={w!r} lies on the excluded rays; use the boundary formula"
        )
    return d


def f_extension(w: complex, tol: ToleranceConfig = DEFAULT_TOL) -> complex:
    """Analytic extension of sigma1 as a function of w (value 1/2 at w = -1)."""
    w = require_finite(w, "w")
    d = _check_domain(w, tol)
    if abs(w + 1.0) < REMOVABLE_RADIUS:
        return complex(0.5, 0.0)
    return (w + 3.0 - principal_sqrt(d)) / (3.0 * (w + 1.0))


def g_extension(w: complex, tol: ToleranceConfig = DEFAULT_TOL) -> complex:
    """Analytic extension of sigma2 as a function of w (value 1/2 at w = +1)."""
    w = require_finite(w, "w")
    d = _check_domain(w, tol)
    if abs(w - 1.0) < REMOVABLE_RADIUS:
        return complex(0.5, 0.0)
    return (-2.0 * w + principal_sqrt(d)) / (3.0 * (1.0 - w))


def _as_boundary_t(t, tol: ToleranceConfig):
    if isinstance(t, BoundaryPoint):
        return t.t
    t_arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t_arr)):
        raise BadParameterError("boundary parameter must be finite")
    if np.any(np.abs(t_arr) < SQRT3 - tol.eq_tol):
        raise BadParameterError("boundary parameter needs |t| >= sqrt(3)")
    return t if np.isscalar(t) else t_arr


def boundary_uv(t, tol: ToleranceConfig = DEFAULT_TOL):
    """(u1, u2, v1, v2) on the rays; accepts scalars or arrays.

    Cancellation-free arrangements are used so the asymptotic tails stay
    accurate (the textbook quotients lose all digits past |t| ~ 1e8):

        u_big(|t|)   = (t^2 + 3 + |t| r) / (3 (t^2 + 1))      r = sqrt(t^2-3)
        u_small(|t|) = 3 / (t^2 + 3 + |t| r)
        v_neg(|t|)   = (2 |t| + r) / (3 (t^2 + 1))
        v_pos(|t|)   = -1 / (r + 2 |t|)

    with u1 = u_big, v1 = v_pos for t > 0 and the mirror images for t < 0.
    """
    t = _as_boundary_t(t, tol)
    at = np.abs(t)
    r = np.sqrt(np.maximum(at * at - 3.0, 0.0))
    heavy = at * at + 3.0 + at * r
    u_big = heavy / (3.0 * (at * at + 1.0))
    u_small = 3.0 / heavy
    v_neg = (2.0 * at + r) / (3.0 * (at * at + 1.0))
    v_pos = -1.0 / (r + 2.0 * at)
    pos = np.asarray(t) >= 0
    u1 = np.where(pos, u_big, u_small)
    u2 = np.where(pos, u_small, u_big)
    v1 = np.where(pos, v_pos, v_neg)
    v2 = np.where(pos, -v_neg, -v_pos)
    if np.isscalar(t):
        return (float(u1), float(u2), float(v1), float(v2))
    return (u1, u2, v1, v2)


def boundary_sigma1(t, tol: ToleranceConfig = DEFAULT_TOL) -> complex:
    """sigma1 on the rays, upper side (Im w3 > 0): u1(t) + i v1(t).

    For a configuration with Im w3 < 0 the value is conj(boundary_sigma1(-t)).
    """
    t = _as_boundary_t(t, tol)
    u1, _, v1, _ = boundary_uv(t, tol)
    if np.isscalar(t):
        return complex(u1, v1)
    return u1 + 1j * v1


def boundary_sigma2(t, tol: ToleranceConfig = DEFAULT_TOL) -> complex:
    """sigma2 on the rays, upper side, via (1 - sigma1) sigma2 = 1/3."""
    s1 = boundary_sigma1(t, tol)
    return 1.0 / (3.0 * (1.0 - s1))


def boundary_modulus_sq(t, tol: ToleranceConfig = DEFAULT_TOL):
    """(a, b) with a = 9(u1^2 + v1^2), b = 9(u2^2 + v2^2); both stay below 4."""
    t = _as_boundary_t(t, tol)
    at = np.abs(t)
    r = np.sqrt(np.maximum(at * at - 3.0, 0.0))
    heavy = at * at + 3.0 + at * r
    big = 2.0 * heavy / (at * at + 1.0)
    small = 18.0 / heavy
    pos = np.asarray(t) >= 0
    a = np.where(pos, big, small)
    b = np.where(pos, small, big)
    if np.isscalar(t):
        return (float(a), float(b))
    return (a, b)


def boundary_sigma_diff(t, tol: ToleranceConfig = DEFAULT_TOL) -> complex:
    """sigma2 - sigma1 on the rays (upper side):
    ((t^2 - 3) - 2 i sqrt(t^2 - 3)) / (3 (t^2 + 1)); real part >= 0."""
    t = _as_boundary_t(t, tol)
    at = np.abs(t)
    r = np.sqrt(np.maximum(at * at - 3.0, 0.0))
    den = 3.0 * (at * at + 1.0)
    re = (at * at - 3.0) / den
    im = -2.0 * r / den
    if np.isscalar(t):
        return complex(re, im)
    return re + 1j * im


def identity_residual(r: RatioVector) -> float:
    """|(1 - sigma1) sigma2 - 1/3|."""
    return abs((1.0 - r.sigma1) * r.sigma2 - 1.0 / 3.0)


def ratios_via_w(
    n: NormalizedCubic,
    report: AdmissibilityReport,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> RatioVector:
    """Ratio vector from the closed forms, dispatched by the admissibility report.

    Interior points use f/g; ray points use the boundary formula on the side
    selected by sign(Im w3n). Raises NotAdmissibleError otherwise.
    """
    if not report.admissible:
        raise NotAdmissibleError(
            "pair is not admissible: " + ", ".join(report.reasons)
        )
    if report.on_boundary:
        t = n.w.imag
        if abs(t) < SQRT3:
            t = math.copysign(SQRT3, t)  # tip rounding
        if n.w3n.imag >= 0.0:
            s1 = boundary_sigma1(t, tol)
        else:
            s1 = boundary_sigma1(-t, tol).conjugate()
        s2 = 1.0 / (3.0 * (1.0 - s1))
        return RatioVector(s1, s2, RatioPath.BOUNDARY)
    s1 = f_extension(n.w, tol)
    s2 = g_extension(n.w, tol)
    return RatioVector(s1, s2, RatioPath.INTERIOR)
