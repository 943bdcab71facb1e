"""Static risk contours for a circle obstacle with uncertain radius.

The obstacle is { (x1, x2) : omega^2 - x1^2 - x2^2 >= 0 } with
omega ~ Uniform[0.3, 0.4].  From the raw moments of omega we get two
polynomials, E[P] and E[P^2], and with them an analytical membership test:
a point is inside the delta-risk contour (collision probability <= delta,
guaranteed) iff

    E[P] <= 0   and   (E[P^2] - E[P]^2) / E[P^2] <= delta.

This script builds the contour for several risk levels, prints the two
polynomials, evaluates a few points, and writes raster maps (CSV + 16-bit
PGM) that external tools can plot directly.
"""

import pathlib

import riskplan as rp

HERE = pathlib.Path(__file__).resolve().parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)

scenario = rp.parse_scenario(HERE.parent / "fixtures" / "example1.scn")
obstacle = scenario.obstacles[0]

print("obstacle polynomial:", obstacle.poly)
contour = rp.build_contour(obstacle, 0.1)
print("E[P]   =", contour.ep)
print("E[P^2] =", contour.ep2)
print()

for point in [(0.0, 0.0), (0.35, 0.0), (0.5, 0.0), (1.0, 1.0)]:
    ev = rp.risk_bound_at(contour, point)
    bound = "-" if ev.bound is None else f"{ev.bound:.3e}"
    print(f"  at {point}: verdict={ev.verdict:<17} E[P]={ev.ep:+.4f} bound={bound}")
print()

for delta in [0.2, 0.1, 0.07, 0.05]:
    c = rp.build_contour(obstacle, delta)
    grid = rp.rasterize(c, scenario.workspace_min, scenario.workspace_max, 201)
    stem = f"example1_delta{delta:g}"
    rp.write_raster_csv(grid, OUT / f"{stem}.csv")
    rp.write_raster_pgm(grid, OUT / f"{stem}.pgm")
    frac = grid.member.mean()
    print(f"delta={delta:<5} member fraction of workspace: {frac:.3f}  -> {stem}.csv/.pgm")

print(f"\nrasters written to {OUT}")
