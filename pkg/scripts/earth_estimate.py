"""Geostationary refrigerator near the Earth: first-order vs exact Schwarzschild bound."""

import math

from gravotto import ReissnerNordstrom, cold_temperature_bound, earth_estimate

# geometric units: GM/c^2 of the Earth in meters
EARTH_MASS_M = 4.435e-3
EARTH_RADIUS_M = 6.371e6
GEOSTATIONARY_RADIUS_M = 4.2164e7


def main():
    g_surface = EARTH_MASS_M / EARTH_RADIUS_M**2
    print(f"surface acceleration g = {g_surface:.3e} 1/m")

    rough = earth_estimate(1e-16, 3.5e7)
    print(f"first order, g=1e-16, dr=3.5e7   : 1 - bound = {1 - rough:.4e}")

    dr = GEOSTATIONARY_RADIUS_M - EARTH_RADIUS_M
    first = earth_estimate(g_surface, dr)
    print(f"first order, surface g, dr={dr:.3e}: 1 - bound = {1 - first:.4e}")

    metric = ReissnerNordstrom(2 * EARTH_MASS_M, 0.0)
    exact = cold_temperature_bound(metric, GEOSTATIONARY_RADIUS_M, EARTH_RADIUS_M)
    closed = math.sqrt((1 - metric.r_s / EARTH_RADIUS_M) / (1 - metric.r_s / GEOSTATIONARY_RADIUS_M))
    print(f"exact Schwarzschild               : 1 - bound = {1 - exact:.4e}  (check {1 - closed:.4e})")


if __name__ == "__main__":
    main()
