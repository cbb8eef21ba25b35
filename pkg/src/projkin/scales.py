"""Electromagnetic <-> gravitational coordinate maps on the time and space axes.

All maps accept scalars or numpy arrays and return the same shape.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError
from .model import GaugeMode, ModelParameters, as_gauge


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def em_time_to_grav(t_E, gauge, p: ModelParameters):
    """``t_G = (R/c) artanh(c t_E / R)`` (consistent) or twice that (literal)."""
    mode = as_gauge(gauge, p).mode
    tau = np.asarray(t_E, dtype=float) / p.t_EU
    if not np.all(np.abs(tau) < 1.0):
        raise DomainError("|t_E| must be < R/c")
    t_G = p.t_EU * np.arctanh(tau)
    if mode is GaugeMode.LITERAL:
        t_G = 2.0 * t_G
    return _out(t_G)


def grav_time_to_em(t_G, gauge, p: ModelParameters):
    """Exact inverse of :func:`em_time_to_grav` in the same gauge."""
    mode = as_gauge(gauge, p).mode
    y = np.asarray(t_G, dtype=float) / p.t_EU
    if not np.all(np.isfinite(y)):
        raise DomainError("t_G must be finite")
    if mode is GaugeMode.LITERAL:
        y = 0.5 * y
    return _out(p.t_EU * np.tanh(y))


def printed_inverse_time(t_G, p: ModelParameters):
    """``(R/2c) tanh(c t_G / R)``: the inverse as commonly printed.

    Inverts neither gauge; kept only for discrepancy reports.
    """
    y = np.asarray(t_G, dtype=float) / p.t_EU
    return _out(0.5 * p.t_EU * np.tanh(y))


def inverse_discrepancy(t_G, p: ModelParameters):
    """Printed inverse minus the exact inverse of the literal-gauge time map.

    Both agree to first order in ``c t_G / R``; the leading difference is
    ``-(c^2 / 8 R^2) t_G^3``.
    """
    return _out(np.asarray(printed_inverse_time(t_G, p))
                - np.asarray(grav_time_to_em(t_G, GaugeMode.LITERAL, p)))


def em_space_to_grav(x_E, p: ModelParameters):
    """``x_G = R arctan(x_E / R)``, bounded by ``pi R / 2``."""
    x = np.asarray(x_E, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("x_E must be finite")
    return _out(p.R * np.arctan(x / p.R))


def grav_space_to_em(x_G, p: ModelParameters):
    y = np.asarray(x_G, dtype=float) / p.R
    if not np.all(np.abs(y) < np.pi / 2):
        raise DomainError("|x_G| must be < pi R / 2")
    return _out(p.R * np.tan(y))
