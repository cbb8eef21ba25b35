"""Model parameters, events and the lift/project maps to homogeneous coordinates.

Events live in projected (electromagnetic) coordinates ``(x, y, z, t)``.
Internally every computation runs on the dimensionless coordinates
``xi = x/R`` and ``tau = c t / R``; a homogeneous point is the 5-vector
``(xi, eta, zeta, tau, 1)`` up to a nonzero scale factor.

The absolute ``x^2 + y^2 + z^2 - c^2 t^2 + R^2 = 0`` is the zero set of the
real signature form ``Q(u) = u1^2 + u2^2 + u3^2 - u4^2 + u5^2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import DomainError, ProjectiveInfinity

#: Signature of the quadratic form preserved by the group.
SIGNATURE = np.diag([1.0, 1.0, 1.0, -1.0, 1.0])

#: Relative threshold on ``|u5| / ||u||`` below which a point is at infinity.
EPS_PROJ = 1e-12

#: Default radius of the Universe in metres. A configuration choice only.
DEFAULT_R = 1.3e26
#: Speed of light in m/s.
DEFAULT_C = 2.99792458e8


def _check_finite_positive(name, value):
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be finite and > 0, got {value!r}")
    return value


@dataclass(frozen=True)
class ModelParameters:
    """Radius ``R`` and light speed ``c``, plus the derived constants."""

    R: float
    c: float

    def __post_init__(self):
        object.__setattr__(self, "R", _check_finite_positive("R", self.R))
        object.__setattr__(self, "c", _check_finite_positive("c", self.c))

    @property
    def t_EU(self) -> float:
        """Electromagnetic age of the Universe, ``R/c``."""
        return self.R / self.c

    @property
    def H0(self) -> float:
        return self.c / self.R

    @property
    def K(self) -> float:
        """Constant (negative) curvature ``-1/R^2``."""
        return -1.0 / self.R**2


def make_parameters(R: float = DEFAULT_R, c: float = DEFAULT_C) -> ModelParameters:
    return ModelParameters(R, c)


@dataclass(frozen=True)
class Event:
    x: float
    y: float
    z: float
    t: float

    def __post_init__(self):
        for name in ("x", "y", "z", "t"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"event coordinate {name} is not finite")
            object.__setattr__(self, name, v)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z, self.t])


@dataclass(frozen=True)
class NormalizedEvent:
    xi: float
    eta: float
    zeta: float
    tau: float

    @classmethod
    def from_event(cls, e: Event, p: ModelParameters) -> "NormalizedEvent":
        return cls(e.x / p.R, e.y / p.R, e.z / p.R, p.c * e.t / p.R)

    def to_event(self, p: ModelParameters) -> Event:
        return Event(self.xi * p.R, self.eta * p.R, self.zeta * p.R, self.tau * p.R / p.c)

    def as_array(self) -> np.ndarray:
        return np.array([self.xi, self.eta, self.zeta, self.tau])


@dataclass(frozen=True)
class HomogeneousPoint:
    """Projective point; ``u`` and ``lambda*u`` are the same point."""

    u: tuple = field()

    def __post_init__(self):
        u = tuple(float(v) for v in self.u)
        if len(u) != 5:
            raise DomainError("a homogeneous point has five components")
        if not all(math.isfinite(v) for v in u) or not any(u):
            raise DomainError("homogeneous components must be finite and not all zero")
        object.__setattr__(self, "u", u)

    @classmethod
    def of(cls, *u) -> "HomogeneousPoint":
        return cls(tuple(u))

    def as_array(self) -> np.ndarray:
        return np.array(self.u)

    def canonical(self) -> "HomogeneousPoint":
        """Representative with ``u5 = 1``, or unit norm with first nonzero entry > 0."""
        a = self.as_array()
        if abs(a[4]) >= EPS_PROJ * np.linalg.norm(a):
            return HomogeneousPoint(tuple(a / a[4]))
        a = a / np.linalg.norm(a)
        if a[np.flatnonzero(a)[0]] < 0:
            a = -a
        return HomogeneousPoint(tuple(a))

    def same_point(self, other: "HomogeneousPoint", tol: float = 1e-12) -> bool:
        a, b = self.as_array(), other.as_array()
        a, b = a / np.linalg.norm(a), b / np.linalg.norm(b)
        return bool(min(np.abs(a - b).max(), np.abs(a + b).max()) <= tol)


class GaugeMode(str, Enum):
    CONSISTENT = "consistent"
    LITERAL = "paper-literal"


@dataclass(frozen=True)
class MetricGauge:
    """Prefactors of the logarithmic distance on the time and space axes.

    ``consistent`` uses ``k_time = R/(2c)`` so the time map is
    ``(R/c) artanh(c t/R)`` with exact inverse ``(R/c) tanh(c t/R)``.
    ``paper-literal`` uses ``k_time = R/c``.  The space prefactor is
    ``R/2`` in both modes (the real form of ``R/(2i)`` times the complex log).
    """

    mode: GaugeMode
    k_time: float
    k_space: float

    @classmethod
    def for_mode(cls, mode, p: ModelParameters) -> "MetricGauge":
        mode = GaugeMode(mode)
        k_time = p.R / (2.0 * p.c) if mode is GaugeMode.CONSISTENT else p.R / p.c
        return cls(mode, k_time, p.R / 2.0)

    @classmethod
    def consistent(cls, p: ModelParameters) -> "MetricGauge":
        return cls.for_mode(GaugeMode.CONSISTENT, p)

    @classmethod
    def literal(cls, p: ModelParameters) -> "MetricGauge":
        return cls.for_mode(GaugeMode.LITERAL, p)


def as_gauge(gauge, p: ModelParameters) -> MetricGauge:
    """Accept a :class:`MetricGauge`, a :class:`GaugeMode` or its string value."""
    if isinstance(gauge, MetricGauge):
        return gauge
    return MetricGauge.for_mode(gauge, p)


class CoordKind(str, Enum):
    TIME = "time"
    SPACE = "space"


@dataclass(frozen=True)
class GravCoordinate:
    """Gravitational (non-projected) time ``t_G`` or length ``x_G``."""

    kind: CoordKind
    value: float

    def __float__(self):
        return float(self.value)


def lift(e: Event, p: ModelParameters) -> HomogeneousPoint:
    """Canonical homogeneous representative ``(x/R, y/R, z/R, ct/R, 1)``."""
    return HomogeneousPoint((e.x / p.R, e.y / p.R, e.z / p.R, p.c * e.t / p.R, 1.0))


def project(u: HomogeneousPoint, p: ModelParameters, eps: float = EPS_PROJ) -> Event:
    a = u.as_array()
    if abs(a[4]) < eps * np.linalg.norm(a):
        raise ProjectiveInfinity("point lies at projective infinity (u5 ~ 0)")
    return Event(p.R * a[0] / a[4], p.R * a[1] / a[4], p.R * a[2] / a[4],
                 (p.R / p.c) * a[3] / a[4])


def signature_form(u) -> float:
    """``Q(u) = u1^2 + u2^2 + u3^2 - u4^2 + u5^2``; zero on the absolute."""
    a = u.as_array() if isinstance(u, HomogeneousPoint) else np.asarray(u, dtype=float)
    return float(a @ SIGNATURE @ a)
