"""Electromagnetic versus gravitational clocks and rulers.

Run: python3 demos/03_scales.py
"""
import numpy as np

import projkin as pk
from projkin import scales

unit = pk.make_parameters(1.0, 1.0)
t = np.array([-0.99, -0.5, 0.0, 0.5, 0.99])
t_G = pk.em_time_to_grav(t, "consistent", unit)
for a, b in zip(t, t_G):
    print(f"t_E = {a:+.2f}  ->  t_G = {b:+.6f}")
print("round trip error:", np.abs(pk.grav_time_to_em(t_G, "consistent", unit) - t).max())

# The tanh-without-doubling inverse only matches to first order.
for tg in (1e-2, 1e-1, 0.5):
    print(f"t_G = {tg}: discrepancy = {scales.inverse_discrepancy(tg, unit):+.3e}")

x = np.array([0.5, 1.0, 10.0, 1e3])
print("x_G =", pk.em_space_to_grav(x, unit), "(bounded by pi/2 =", np.pi / 2, ")")
