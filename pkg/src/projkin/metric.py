"""Cayley-Klein distance on the (x, t) plane with absolute ``c^2 t^2 - x^2 = R^2``.

A chord through two points meets the absolute in ``M`` and ``N``; the
distance is ``k log`` of the cross-ratio of ``A, B, M, N``.  Along the time
axis that gives ``k log((R + c t)/(R - c t))``.  Along a constant-time line
the chord endpoints are complex and the distance reduces to the arctan
form, which is what :func:`space_distance` evaluates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateChord, DomainError, NoRealIntersection
from .model import CoordKind, GravCoordinate, MetricGauge, ModelParameters, as_gauge

COLLINEAR_TOL = 1e-10
ABSOLUTE_TOL = 1e-10


@dataclass(frozen=True)
class PlanePoint:
    x: float
    t: float

    def __post_init__(self):
        for name in ("x", "t"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"plane point coordinate {name} is not finite")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class ChordPair:
    M: PlanePoint
    N: PlanePoint


def _norm(P: PlanePoint, p: ModelParameters) -> np.ndarray:
    return np.array([P.x / p.R, p.c * P.t / p.R])


def _denorm(v, p: ModelParameters) -> PlanePoint:
    return PlanePoint(v[0] * p.R, v[1] * p.R / p.c)


def _line(A: PlanePoint, B: PlanePoint, p: ModelParameters):
    """Base point and direction (future-pointing, else +x) of the line AB."""
    a, b = _norm(A, p), _norm(B, p)
    d = b - a
    if not np.any(d):
        raise DomainError("A and B coincide; the line is undefined")
    if d[1] < 0 or (d[1] == 0 and d[0] < 0):
        d = -d
    return a, d


def _chord_parameters(a, d):
    # (a_t + s d_t)^2 - (a_x + s d_x)^2 = 1
    qa = d[1] ** 2 - d[0] ** 2
    qb = a[1] * d[1] - a[0] * d[0]
    qc = a[1] ** 2 - a[0] ** 2 - 1.0
    scale = max(qb * qb, abs(qa * qc), 1e-300)
    if abs(qa) <= 1e-14 * float(d @ d):
        raise DegenerateChord("line is parallel to an asymptote of the absolute")
    disc = qb * qb - qa * qc
    if disc < -1e-14 * scale:
        raise NoRealIntersection("line does not meet the absolute in real points")
    if disc <= 1e-14 * scale:
        raise DegenerateChord("line is tangent to the absolute")
    q = -(qb + math.copysign(math.sqrt(disc), qb))
    s1, s2 = q / qa, qc / q
    return (s1, s2) if s1 < s2 else (s2, s1)


def chord_endpoints(A: PlanePoint, B: PlanePoint, p: ModelParameters) -> ChordPair:
    """Intersections of the line AB with the absolute, in line-parameter order."""
    a, d = _line(A, B, p)
    s_m, s_n = _chord_parameters(a, d)
    return ChordPair(_denorm(a + s_m * d, p), _denorm(a + s_n * d, p))


def cross_ratio(A: PlanePoint, B: PlanePoint, M: PlanePoint, N: PlanePoint,
                p: ModelParameters | None = None) -> float:
    """``(AM / BM) : (AN / BN)`` from signed positions along the common line.

    With ``M`` the chord endpoint beyond ``B`` this is greater than one and
    equals ``(R + ct)/(R - ct)`` for ``A`` at the origin and ``B`` at time
    ``t`` on the time axis.  ``p`` (if given) makes the collinearity test
    work on ``(x/R, ct/R)`` rather than raw coordinates.
    """
    pts = [A, B, M, N]
    if p is not None:
        xy = np.array([_norm(P, p) for P in pts])
    else:
        xy = np.array([[P.x, P.t] for P in pts])
    i, j = max(((i, j) for i in range(4) for j in range(i + 1, 4)),
               key=lambda ij: float(np.sum((xy[ij[0]] - xy[ij[1]]) ** 2)))
    span = xy[j] - xy[i]
    length = float(np.hypot(*span))
    if length == 0.0:
        raise DomainError("all four points coincide")
    u = span / length
    rel = xy - xy[i]
    off = np.abs(rel[:, 0] * u[1] - rel[:, 1] * u[0]) / length
    if off.max() > COLLINEAR_TOL:
        raise DomainError(f"points are not collinear (offset {off.max():.2e})")
    sa, sb, sm, sn = rel @ u
    den = (sm - sb) * (sn - sa)
    if sm == sb or sn == sa or den == 0.0:
        raise DomainError("cross-ratio denominator vanishes (B = M or A = N)")
    return float((sm - sa) * (sn - sb) / den)


def time_distance(A: PlanePoint, B: PlanePoint, gauge, p: ModelParameters) -> GravCoordinate:
    """Signed Cayley-Klein distance ``k_time log(cross-ratio)`` along a timelike chord.

    Positive when ``B`` lies to the future of ``A`` on the chord.  Both points
    must lie strictly inside the chord.
    """
    g = as_gauge(gauge, p)
    if A == B:
        return GravCoordinate(CoordKind.TIME, 0.0)
    a, d = _line(A, B, p)
    s_m, s_n = _chord_parameters(a, d)
    s_b = float((_norm(B, p) - a) @ d / (d @ d))
    for s in (0.0, s_b):
        if not s_m < s < s_n:
            raise DomainError("point lies on or beyond the absolute")
    M, N = _denorm(a + s_m * d, p), _denorm(a + s_n * d, p)
    ratio = cross_ratio(A, B, N, M, p)
    return GravCoordinate(CoordKind.TIME, g.k_time * math.log(ratio))


def space_distance(A: PlanePoint, B: PlanePoint, p: ModelParameters) -> GravCoordinate:
    """Signed distance between two simultaneous points, ``R arctan`` form.

    On the line ``t = 0`` the endpoints are ``x = -iR, iR`` and the distance
    from the origin is ``R arctan(x/R)``.  On another constant-time line with
    ``|ct| < R`` the endpoints sit at ``+-i rho``, ``rho = sqrt(R^2 - c^2 t^2)``.
    Only the ``t = 0`` line carries accuracy guarantees.
    """
    if abs(A.t - B.t) > COLLINEAR_TOL * max(abs(A.t), abs(B.t), p.t_EU):
        raise DomainError("space_distance needs two points at the same time")
    tau = p.c * A.t / p.R
    if not abs(tau) < 1.0:
        raise DomainError("constant-time line does not cross the model interior")
    rho = p.R * math.sqrt(1.0 - tau * tau)
    value = p.R * (math.atan(B.x / rho) - math.atan(A.x / rho))
    return GravCoordinate(CoordKind.SPACE, value)
