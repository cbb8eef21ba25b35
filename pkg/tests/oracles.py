"""Independent reference evaluations used only by the tests.

These never call into :mod:`projkin`; they evaluate the fractional-linear
forms at 40 significant digits with mpmath, and carry a hand-rolled complex
arithmetic on real pairs for the space-axis logarithm.
"""
import math

import mpmath as mp

mp.mp.dps = 40


def time_translation(x, y, z, t, T, R, c):
    x, y, z, t, T, R, c = map(mp.mpf, (x, y, z, t, T, R, c))
    eta = T / (R / c)
    den = 1 - eta * t / (R / c)
    root = mp.sqrt(1 - eta**2)
    return [float(v) for v in (x * root / den, y * root / den, z * root / den, (t - T) / den)]


def spatial_translation_x(x, y, z, t, S, R):
    x, y, z, t, S, R = map(mp.mpf, (x, y, z, t, S, R))
    alpha = S / R
    den = 1 + alpha * x / R
    root = mp.sqrt(1 + alpha**2)
    return [float(v) for v in ((x - S) / den, y * root / den, z * root / den, t * root / den)]


def pulling_x(x, y, z, t, V, c):
    x, y, z, t, V, c = map(mp.mpf, (x, y, z, t, V, c))
    root = mp.sqrt(1 - (V / c) ** 2)
    return [float(v) for v in ((x - V * t) / root, y, z, (t - V * x / c**2) / root)]


def time_axis_cross_ratio(t, R, c):
    t, R, c = map(mp.mpf, (t, R, c))
    return float((R + c * t) / (R - c * t))


# -- complex numbers as (re, im) pairs ---------------------------------------

def cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def cdiv(a, b):
    d = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d)


def clog(a):
    return (math.log(math.hypot(*a)), math.atan2(a[1], a[0]))


def space_axis_distance(x, R):
    """Real part of ``(R/2i) log((R + i x)/(R - i x))`` on real pairs."""
    ratio = cdiv((R, x), (R, -x))
    log = clog(ratio)
    # (R/2i) * (u + i v) = (R/2) * (v - i u)
    value = cmul((R / 2.0, 0.0), (log[1], -log[0]))
    return value[0], value[1]
