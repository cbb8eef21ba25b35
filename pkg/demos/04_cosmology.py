"""Ages, Hubble rate and clock drift with SI defaults.

Run: python3 demos/04_cosmology.py
"""
import projkin as pk
from projkin.cosmology import seconds_to_years

si = pk.make_parameters(pk.DEFAULT_R, pk.DEFAULT_C)
print(f"t_EU = {seconds_to_years(si.t_EU):.4g} yr,  H0 = {si.H0:.4g} 1/s")

half = 0.5 * si.t_EU
print("two half-ages compose to", pk.compose_em_ages(half, half, si) / si.t_EU, "t_EU")
print("the boundary is absorbing:", pk.compose_em_ages(si.t_EU, half, si) == si.t_EU)

for x_mly in (10, 100, 1000):
    x = x_mly * 9.4607e21
    print(f"x = {x_mly:5d} Mly  recession = {pk.hubble(x, 0.0, si).V_E / 1e3:10.1f} km/s")

t = pk.drift_horizon(1.0, "consistent", si)
print(f"clocks disagree by one second after {seconds_to_years(t):.1f} yr")
