"""Cross-ratio distances inside the absolute.

Run: python3 demos/02_metric.py
"""
import projkin as pk
from projkin.metric import PlanePoint

unit = pk.make_parameters(1.0, 1.0)
origin = PlanePoint(0.0, 0.0)

for t in (0.25, 0.5, 0.9, 0.99):
    B = PlanePoint(0.0, t)
    chord = pk.chord_endpoints(origin, B, unit)
    ratio = pk.cross_ratio(origin, B, chord.N, chord.M, unit)
    d = pk.time_distance(origin, B, "consistent", unit)
    print(f"t = {t:5}  chord ends t = {chord.M.t:+.3f}, {chord.N.t:+.3f}  "
          f"cross-ratio = {ratio:9.4f}  distance = {d.value:.6f}")

# The same pair measured in the doubled gauge.
print("paper-literal gauge at t = 0.5:", pk.time_distance(origin, PlanePoint(0, 0.5), "paper-literal", unit).value)

# Spatial distances saturate at pi R / 2.
for x in (1.0, 10.0, 1e6):
    print(f"x = {x:>9}  space distance = {pk.space_distance(origin, PlanePoint(x, 0.0), unit).value:.6f}")
