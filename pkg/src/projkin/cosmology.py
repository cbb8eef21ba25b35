"""Age composition, velocity transformation, Hubble flow and clock drift."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceFailure, DomainError
from .model import GaugeMode, ModelParameters, as_gauge
from .scales import em_time_to_grav

JULIAN_YEAR = 365.25 * 86400.0


def compose_em_ages(t1: float, t2: float, p: ModelParameters) -> float:
    """``(t1 + t2) / (1 + t1 t2 / t_EU^2)``, the addition law of time translations."""
    T = p.t_EU
    if not (abs(t1) <= T and abs(t2) <= T):
        raise DomainError("ages must satisfy |t| <= t_EU")
    b1, b2 = abs(t1) == T, abs(t2) == T
    if b1 and b2 and t1 != t2:
        raise DomainError("opposite boundary ages have no composition")
    if b1:
        return float(t1)
    if b2:
        return float(t2)
    return (t1 + t2) / (1.0 + (t1 / T) * (t2 / T))


def velocity_transform(V_E: float, x_E: float, t_E: float, eta: float,
                       p: ModelParameters) -> float:
    """Velocity seen after a time translation by ``eta t_EU``.

    Solves ``V' sqrt(1 - eta^2) = V (1 + eta t/t_EU) - x eta / t_EU`` for ``V'``.
    """
    if not abs(eta) < 1.0:
        raise DomainError("|eta| must be < 1")
    den = 1.0 + eta * t_E / p.t_EU
    if den == 0.0:
        raise DomainError("translation sends this instant to infinity")
    return (V_E * den - x_E * eta / p.t_EU) / math.sqrt(1.0 - eta * eta)


@dataclass(frozen=True)
class HubbleState:
    H: float
    V_E: float


def hubble(x_E: float, t_E: float, p: ModelParameters) -> HubbleState:
    """``H = 1/(t_E + t_EU)`` and ``V_E = H x_E``; ``H(0) = c/R`` exactly."""
    if not t_E > -p.t_EU:
        raise DomainError("the Hubble rate needs t_E > -t_EU")
    H = p.c / (p.R + p.c * t_E)
    return HubbleState(H, H * x_E)


@dataclass(frozen=True)
class DriftReport:
    t_E: float
    t_G: float
    drift: float
    gauge: GaugeMode


def _atanh_minus_identity(x: float) -> float:
    # artanh(x) - x without cancellation for small x
    if abs(x) >= 0.1:
        return math.atanh(x) - x
    x2 = x * x
    term, total, k = x * x2, 0.0, 3
    while True:
        add = term / k
        total += add
        if abs(add) <= 1e-17 * abs(total):
            return total
        term *= x2
        k += 2


def _drift(t_E: float, mode: GaugeMode, p: ModelParameters) -> float:
    x = t_E / p.t_EU
    if mode is GaugeMode.CONSISTENT:
        return p.t_EU * _atanh_minus_identity(x)
    return p.t_EU * (2.0 * math.atanh(x) - x)


def clock_drift(t_E: float, gauge, p: ModelParameters) -> DriftReport:
    """Gravitational minus electromagnetic time at ``t_E``."""
    mode = as_gauge(gauge, p).mode
    t_G = em_time_to_grav(t_E, mode, p)
    return DriftReport(float(t_E), t_G, _drift(t_E, mode, p), mode)


def drift_horizon(target: float, gauge, p: ModelParameters,
                  rtol: float = 1e-10, max_iter: int = 2200) -> float:
    """The ``t_E`` in ``(0, R/c)`` at which the drift reaches ``target``.

    Bisection on the monotone drift; the bracket is ``(0, R/c)``.
    """
    if not (target > 0.0 and math.isfinite(target)):
        raise DomainError("drift target must be finite and > 0")
    mode = as_gauge(gauge, p).mode
    lo, hi = 0.0, math.nextafter(1.0, 0.0)
    if _drift(hi * p.t_EU, mode, p) < target:
        raise ConvergenceFailure("target drift exceeds the representable range")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if _drift(mid * p.t_EU, mode, p) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= rtol * lo:
            return 0.5 * (lo + hi) * p.t_EU
    raise ConvergenceFailure(f"bisection did not reach rtol={rtol} in {max_iter} steps")


def seconds_to_years(seconds: float) -> float:
    return seconds / JULIAN_YEAR
