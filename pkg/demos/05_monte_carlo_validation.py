"""Monte Carlo validation of the analytical risk bounds.

The contour is an inner approximation: membership must imply true
collision probability <= delta.  This script checks that claim on a grid
with a large seeded sample batch, then shows the bound's tightness by
comparing the analytical value against the estimate at points approaching
the obstacle.
"""

import pathlib

import numpy as np

import riskplan as rp

HERE = pathlib.Path(__file__).resolve().parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)

scenario = rp.parse_scenario(HERE.parent / "fixtures" / "example1.scn")
obstacle = scenario.obstacles[0]

for delta in [0.2, 0.1, 0.05]:
    contour = rp.build_contour(obstacle, delta)
    result = rp.validate_contour(
        contour, obstacle, scenario.workspace_min, scenario.workspace_max, 101,
        cfg=rp.McConfig(n=100_000, seed=1),
    )
    print(
        f"delta={delta:<5} member points {len(result.points):>5}  "
        f"violations {len(result.violations)}"
    )
    result.write_csv(OUT / f"validation_delta{delta:g}.csv")

print()
print("bound tightness along the x1 axis (delta = 0.1):")
contour = rp.build_contour(obstacle, 0.1)
print(f"{'x1':>6} {'analytical bound':>17} {'MC estimate':>12}")
for x1 in np.linspace(0.44, 0.80, 10):
    ev = rp.risk_bound_at(contour, (float(x1), 0.0))
    est = rp.mc_point_risk(obstacle, (float(x1), 0.0), cfg=rp.McConfig(n=100_000, seed=2))
    bound = "-" if ev.bound is None else f"{ev.bound:.5f}"
    print(f"{x1:6.2f} {bound:>17} {est.estimate:12.5f}")

print(f"\nvalidation tables written to {OUT}")
