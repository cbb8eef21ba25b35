"""Galileo, Poincare and Fantappie transformation groups.

The Fantappie group is carried two ways: as fractional-linear maps on
events (``closed_form_apply``) and as 5x5 matrices ``M`` with
``M^T G M = G``, ``G = diag(1, 1, 1, -1, 1)``, acting on homogeneous points
(``apply``).  The two routes are independent and are checked against each
other in the test-suite.

Sign conventions for the generators, in dimensionless coordinates
``xi = x/R``, ``tau = ct/R``:

* time translation by ``T`` (``eta = cT/R``)::

      xi'  = xi sqrt(1 - eta^2) / (1 - eta tau)
      tau' = (tau - eta) / (1 - eta tau)

  a hyperbolic rotation of the (u4, u5) plane with ``tanh(phi) = -eta``;
* spatial translation by ``S`` along x (``alpha = S/R``)::

      xi'  = (xi - alpha) / (1 + alpha xi)
      other' = other sqrt(1 + alpha^2) / (1 + alpha xi)

  a circular rotation of the (u1, u5) plane with ``tan(theta) = alpha``;
* pulling with velocity ``V`` along x (``beta = V/c``): the Lorentz boost,
  a hyperbolic rotation of the (u1, u4) plane with ``tanh(psi) = beta``;
* spatial rotation by an angle in a coordinate plane.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .errors import ConvergenceFailure, DomainError, NonOrthogonal, ProjectiveInfinity
from .model import (
    EPS_PROJ,
    SIGNATURE,
    Event,
    HomogeneousPoint,
    ModelParameters,
    NormalizedEvent,
    lift,
    project,
)

ORTHO_TOL = 1e-10
MINKOWSKI = np.diag([1.0, 1.0, 1.0, -1.0])
_AXES = {"x": 0, "y": 1, "z": 2}
_PROVENANCE_LIMIT = 64


# -- Galileo ---------------------------------------------------------------

class GalileoVariant(str, Enum):
    ROTATION = "rotation"
    INERTIAL = "inertial"
    SPATIAL_TRANSLATION = "spatial-translation"
    TIME_TRANSLATION = "time-translation"


@dataclass(frozen=True)
class GalileoParams:
    variant: GalileoVariant
    rotation: np.ndarray = field(default_factory=lambda: np.eye(3))
    velocity: tuple = (0.0, 0.0, 0.0)
    shift: tuple = (0.0, 0.0, 0.0)
    t0: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "variant", GalileoVariant(self.variant))
        A = np.asarray(self.rotation, dtype=float)
        if A.shape != (3, 3):
            raise DomainError("rotation must be a 3x3 matrix")
        if np.abs(A.T @ A - np.eye(3)).max() > 1e-12 or abs(np.linalg.det(A) - 1.0) > 1e-12:
            raise DomainError("rotation must be orthogonal with determinant +1")
        object.__setattr__(self, "rotation", A)


def galileo_apply(g: GalileoParams, e: Event) -> Event:
    r = np.array([e.x, e.y, e.z])
    t = e.t
    if g.variant is GalileoVariant.ROTATION:
        r = g.rotation @ r
    elif g.variant is GalileoVariant.INERTIAL:
        r = r + np.asarray(g.velocity, dtype=float) * t
    elif g.variant is GalileoVariant.SPATIAL_TRANSLATION:
        r = r + np.asarray(g.shift, dtype=float)
    else:
        t = t + g.t0
    return Event(*r, t)


def rotation_matrix(angle: float, plane: str = "xy") -> np.ndarray:
    """3x3 rotation by ``angle`` in a coordinate plane (``"xy"``, ``"yz"``, ``"zx"``)."""
    i, j = _rotation_plane(plane)
    A = np.eye(3)
    c, s = math.cos(angle), math.sin(angle)
    A[i, i], A[i, j], A[j, i], A[j, j] = c, -s, s, c
    return A


# -- Poincare --------------------------------------------------------------

@dataclass(frozen=True)
class PoincareElement:
    """``X' = A X + a`` on ``X = (x, y, z, ct)``; ``a = (ax, ay, az, at)``."""

    A: np.ndarray
    a: tuple = (0.0, 0.0, 0.0, 0.0)

    def __post_init__(self):
        A = np.asarray(self.A, dtype=float)
        if A.shape != (4, 4):
            raise DomainError("Lorentz matrix must be 4x4")
        if np.abs(A.T @ MINKOWSKI @ A - MINKOWSKI).max() > 1e-12:
            raise DomainError("matrix does not preserve the Minkowski form")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "a", tuple(float(v) for v in self.a))


def boost(beta: float, axis: str = "x") -> np.ndarray:
    """4x4 Lorentz boost with velocity ``beta c`` along ``axis``."""
    if not abs(beta) < 1.0:
        raise DomainError(f"|beta| must be < 1, got {beta}")
    i = _AXES[axis]
    gamma = 1.0 / math.sqrt(1.0 - beta * beta)
    A = np.eye(4)
    A[i, i] = A[3, 3] = gamma
    A[i, 3] = A[3, i] = -gamma * beta
    return A


def poincare_apply(g: PoincareElement, e: Event, c: float = 1.0) -> Event:
    X = np.array([e.x, e.y, e.z, c * e.t])
    ax, ay, az, at = g.a
    Y = g.A @ X + np.array([ax, ay, az, c * at])
    return Event(Y[0], Y[1], Y[2], Y[3] / c)


def calibration_intersection(beta: float, R: float):
    """Where the time axis of an observer moving at ``beta`` meets ``x4^2 - x1^2 = R^2``."""
    if not abs(beta) < 1.0:
        raise DomainError(f"|beta| must be < 1, got {beta}")
    root = math.sqrt(1.0 - beta * beta)
    return beta * R / root, R / root


# -- Fantappie generators ---------------------------------------------------

class GeneratorKind(str, Enum):
    TIME_TRANSLATION = "time-translation"
    SPATIAL_TRANSLATION = "spatial-translation"
    PULLING = "pulling"
    ROTATION = "rotation"


@dataclass(frozen=True)
class GeneratorParams:
    """One-parameter motion.

    ``magnitude`` is a time ``T`` for time translations, a length ``S`` for
    spatial translations, a speed ``V`` for pullings and an angle (radians)
    for rotations.  ``axis`` is ``x``/``y``/``z``; for rotations it is either
    a plane (``"xy"``, ``"yz"``, ``"zx"``) or the axis rotated about.
    """

    kind: GeneratorKind
    magnitude: float
    axis: str = "x"

    def __post_init__(self):
        object.__setattr__(self, "kind", GeneratorKind(self.kind))
        m = float(self.magnitude)
        if not math.isfinite(m):
            raise DomainError("generator magnitude must be finite")
        object.__setattr__(self, "magnitude", m)
        if self.kind is GeneratorKind.ROTATION:
            _rotation_plane(self.axis)
        elif self.axis not in _AXES:
            raise DomainError(f"unknown axis {self.axis!r}")

    def dimensionless(self, p: ModelParameters) -> float:
        """``eta``, ``alpha``, ``beta`` or the angle, with the range checks."""
        if self.kind is GeneratorKind.TIME_TRANSLATION:
            eta = self.magnitude * p.c / p.R
            if not abs(eta) < 1.0:
                raise DomainError(f"time translation needs |T| < R/c (eta={eta})")
            return eta
        if self.kind is GeneratorKind.SPATIAL_TRANSLATION:
            return self.magnitude / p.R
        if self.kind is GeneratorKind.PULLING:
            beta = self.magnitude / p.c
            if not abs(beta) < 1.0:
                raise DomainError(f"pulling needs |V| < c (beta={beta})")
            return beta
        return self.magnitude


def _rotation_plane(axis: str):
    planes = {"xy": (0, 1), "yz": (1, 2), "zx": (2, 0),
              "yx": (1, 0), "zy": (2, 1), "xz": (0, 2),
              "z": (0, 1), "x": (1, 2), "y": (2, 0)}
    try:
        return planes[axis]
    except KeyError:
        raise DomainError(f"unknown rotation plane {axis!r}") from None


# -- 5x5 group elements -----------------------------------------------------

def signature_defect(M: np.ndarray) -> float:
    """Frobenius norm of ``M^T G M - G``."""
    return float(np.linalg.norm(M.T @ SIGNATURE @ M - SIGNATURE))


@dataclass(frozen=True)
class GroupElement:
    M: np.ndarray
    provenance: tuple = ()

    def __post_init__(self):
        M = np.array(self.M, dtype=float)
        if M.shape != (5, 5) or not np.all(np.isfinite(M)):
            raise NonOrthogonal("group element must be a finite 5x5 matrix")
        defect = signature_defect(M)
        if defect >= ORTHO_TOL:
            raise NonOrthogonal(f"||M^T G M - G||_F = {defect:.3e}")
        if abs(np.linalg.det(M) - 1.0) >= ORTHO_TOL:
            raise NonOrthogonal("determinant is not +1")
        M.setflags(write=False)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "provenance", tuple(self.provenance)[-_PROVENANCE_LIMIT:])

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return compose(self, other)


def identity() -> GroupElement:
    return GroupElement(np.eye(5))


def _plane_rotation(i: int, j: int, cos: float, sin: float) -> np.ndarray:
    M = np.eye(5)
    M[i, i] = M[j, j] = cos
    M[i, j] = -sin
    M[j, i] = sin
    return M


def _plane_boost(i: int, j: int, cosh: float, sinh: float) -> np.ndarray:
    M = np.eye(5)
    M[i, i] = M[j, j] = cosh
    M[i, j] = M[j, i] = sinh
    return M


def fantappie_generator(g: GeneratorParams, p: ModelParameters) -> GroupElement:
    v = g.dimensionless(p)
    if g.kind is GeneratorKind.TIME_TRANSLATION:
        gamma = 1.0 / math.sqrt(1.0 - v * v)
        M = _plane_boost(3, 4, gamma, -gamma * v)
    elif g.kind is GeneratorKind.SPATIAL_TRANSLATION:
        # theta = arctan(alpha); u_i' = cos u_i - sin u5, u5' = sin u_i + cos u5
        cos = 1.0 / math.sqrt(1.0 + v * v)
        M = _plane_rotation(_AXES[g.axis], 4, cos, v * cos)
    elif g.kind is GeneratorKind.PULLING:
        gamma = 1.0 / math.sqrt(1.0 - v * v)
        M = _plane_boost(_AXES[g.axis], 3, gamma, -gamma * v)
    else:
        i, j = _rotation_plane(g.axis)
        M = _plane_rotation(i, j, math.cos(v), math.sin(v))
    return GroupElement(M, (g,))


def closed_form_apply(g: GeneratorParams, e: Event, p: ModelParameters,
                      eps: float = EPS_PROJ) -> Event:
    """Evaluate the fractional-linear form of a generator on one event."""
    v = g.dimensionless(p)
    n = NormalizedEvent.from_event(e, p)
    r = [n.xi, n.eta, n.zeta]
    tau = n.tau
    if g.kind is GeneratorKind.TIME_TRANSLATION:
        den = 1.0 - v * tau
        _check_denominator(den, 1.0 + abs(v * tau))
        root = math.sqrt(1.0 - v * v)
        r = [q * root / den for q in r]
        tau = (tau - v) / den
    elif g.kind is GeneratorKind.SPATIAL_TRANSLATION:
        i = _AXES[g.axis]
        den = 1.0 + v * r[i]
        _check_denominator(den, 1.0 + abs(v * r[i]))
        root = math.sqrt(1.0 + v * v)
        r = [(q - v) / den if k == i else q * root / den for k, q in enumerate(r)]
        tau = tau * root / den
    elif g.kind is GeneratorKind.PULLING:
        i = _AXES[g.axis]
        gamma = 1.0 / math.sqrt(1.0 - v * v)
        r[i], tau = gamma * (r[i] - v * tau), gamma * (tau - v * r[i])
    else:
        i, j = _rotation_plane(g.axis)
        c, s = math.cos(v), math.sin(v)
        r[i], r[j] = c * r[i] - s * r[j], s * r[i] + c * r[j]
    return NormalizedEvent(*r, tau).to_event(p)


def _check_denominator(den, scale):
    if abs(den) < EPS_PROJ * scale:
        raise ProjectiveInfinity("denominator vanishes: image at projective infinity")


def renormalize(M: np.ndarray) -> np.ndarray:
    """One refinement step toward ``M^T G M = G``: ``(3M - M G M^T G M) / 2``.

    Evaluated as ``M - M G D / 2`` with ``D = M^T G M - G`` so the correction
    comes from the small defect rather than a difference of large products.
    """
    G = SIGNATURE
    D = M.T @ G @ M - G
    return M - 0.5 * (M @ G @ D)


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """``g1 . g2`` (apply ``g2`` first), re-projected onto the group."""
    M = renormalize(g1.M @ g2.M)
    try:
        return GroupElement(M, g2.provenance + g1.provenance)
    except NonOrthogonal as exc:
        raise NonOrthogonal(f"composition drifted off the group: {exc}") from None


def inverse(g: GroupElement) -> GroupElement:
    G = SIGNATURE
    return GroupElement(G @ g.M.T @ G, g.provenance[::-1])


def apply(g: GroupElement, e: Event, p: ModelParameters) -> Event:
    image = g.M @ lift(e, p).as_array()
    return project(HomogeneousPoint(tuple(image)), p)


def apply_homogeneous(g: GroupElement, u: HomogeneousPoint) -> HomogeneousPoint:
    return HomogeneousPoint(tuple(g.M @ u.as_array()))


def effective_parameter(g: GroupElement, kind, p: ModelParameters, axis: str = "x") -> float:
    """Read back ``T`` (time translation) or ``V`` (pulling) from a one-plane element."""
    kind = GeneratorKind(kind)
    M = g.M
    if kind is GeneratorKind.TIME_TRANSLATION:
        return -M[3, 4] / M[3, 3] * p.t_EU
    if kind is GeneratorKind.PULLING:
        i = _AXES[axis]
        return -M[i, 3] / M[i, i] * p.c
    if kind is GeneratorKind.SPATIAL_TRANSLATION:
        i = _AXES[axis]
        return M[4, i] / M[i, i] * p.R
    i, j = _rotation_plane(axis)
    return math.atan2(M[j, i], M[i, i])


# -- contraction limits -----------------------------------------------------

def poincare_limit_apply(g: GeneratorParams, e: Event, c: float = 1.0) -> Event:
    """The ``R -> infinity`` image of an event under a generator."""
    if g.kind is GeneratorKind.TIME_TRANSLATION:
        return Event(e.x, e.y, e.z, e.t - g.magnitude)
    if g.kind is GeneratorKind.SPATIAL_TRANSLATION:
        shift = [0.0, 0.0, 0.0, 0.0]
        shift[_AXES[g.axis]] = -g.magnitude
        return poincare_apply(PoincareElement(np.eye(4), shift), e, c)
    if g.kind is GeneratorKind.PULLING:
        return poincare_apply(PoincareElement(boost(g.magnitude / c, g.axis)), e, c)
    A = np.eye(4)
    A[:3, :3] = rotation_matrix(g.magnitude, g.axis)
    return poincare_apply(PoincareElement(A), e, c)


@dataclass(frozen=True)
class ConvergenceReport:
    R_values: tuple
    deviations: tuple
    fitted_slope: Optional[float]


#: Deviations below this are rounding noise; no slope is fitted through them.
NOISE_FLOOR = 1e-14


def limit_deviation(g: GeneratorParams, e: Event, R_list: Sequence[float],
                    c: float = 1.0) -> ConvergenceReport:
    """Distance between the Fantappie image and its ``R -> infinity`` limit.

    For each ``R`` the deviation is the sup-norm of the difference of the
    two images in dimensionless coordinates ``(x/R, y/R, z/R, ct/R)``.  The
    Fantappie image is taken through the matrix route.  ``fitted_slope`` is
    the least-squares slope of log(deviation) against log(R); it is ``None``
    when every deviation sits at the rounding floor (pullings, rotations).
    """
    Rs = [float(R) for R in R_list]
    if len(Rs) < 2 or any(b <= a for a, b in zip(Rs, Rs[1:])) or Rs[0] <= 0:
        raise DomainError("R_list must be positive and strictly increasing")
    limit = poincare_limit_apply(g, e, c)
    devs = []
    for R in Rs:
        p = ModelParameters(R, c)
        image = apply(fantappie_generator(g, p), e, p)
        diff = np.array([image.x - limit.x, image.y - limit.y, image.z - limit.z,
                         c * (image.t - limit.t)]) / R
        devs.append(float(np.abs(diff).max()))
    if max(devs) < NOISE_FLOOR:
        return ConvergenceReport(tuple(Rs), tuple(devs), None)
    if any(d <= 0.0 for d in devs):
        raise ConvergenceFailure("zero deviation mixed with nonzero deviations")
    if any(b > a * (1.0 + 1e-9) for a, b in zip(devs, devs[1:])):
        raise ConvergenceFailure(f"deviations are not decreasing in R: {devs}")
    slope = float(np.polyfit(np.log(Rs), np.log(devs), 1)[0])
    return ConvergenceReport(tuple(Rs), tuple(devs), slope)
