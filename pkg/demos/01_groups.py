"""Fantappie generators as 5x5 matrices, and how they flatten to Poincare.

Run: python3 demos/01_groups.py
"""
import numpy as np

import projkin as pk
from projkin import groups

unit = pk.make_parameters(1.0, 1.0)
event = pk.Event(0.2, 0.0, 0.0, 0.4)

# A time translation by half the universe age, via the matrix and via the closed form.
tt = pk.GeneratorParams("time-translation", 0.5)
g = pk.fantappie_generator(tt, unit)
print("time-translation matrix:\n", np.round(g.M, 6))
print("matrix route :", pk.apply(g, event, unit))
print("closed form  :", pk.closed_form_apply(tt, event, unit))

# Compose a few generators; the product stays on the group.
h = pk.identity()
for gen in [tt, pk.GeneratorParams("pulling", 0.6, "y"), pk.GeneratorParams("rotation", 0.3, "xy")]:
    h = pk.compose(pk.fantappie_generator(gen, unit), h)
print("signature defect after composing:", groups.signature_defect(h.M))
print("h . h^-1 == identity:", np.allclose(pk.compose(h, pk.inverse(h)).M, np.eye(5)))

# Contraction: as R grows the image approaches the Poincare one.
report = pk.limit_deviation(pk.GeneratorParams("spatial-translation", 1.0),
                            pk.Event(0.2, 0.1, 0.0, 0.3), [1e2, 1e3, 1e4])
for R, d in zip(report.R_values, report.deviations):
    print(f"R = {R:8.0e}   deviation = {d:.3e}")
print("log-log slope:", report.fitted_slope)
