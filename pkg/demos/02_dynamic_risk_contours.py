"""Dynamic risk contours for a moving circle with uncertain radius and
uncertain trajectory.

The obstacle's defining polynomial involves time, so E[P] and E[P^2]
become polynomials in (x, t) and the contour is a time-varying set.  The
script rasterizes the contour at three time slices and reports how the
safe region moves with the obstacle.
"""

import pathlib

import riskplan as rp

HERE = pathlib.Path(__file__).resolve().parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)

scenario = rp.parse_scenario(HERE.parent / "fixtures" / "example2.scn")
obstacle = scenario.obstacles[0]
contour = rp.build_contour(obstacle, 0.1)

print(f"obstacle '{obstacle.name}' dynamic: {obstacle.dynamic}")
print(f"E[P] uses variables {sorted(contour.ep.used_names())}")
print()

for t in [0.0, 0.5, 1.0]:
    grid = rp.rasterize(
        contour, scenario.workspace_min, scenario.workspace_max, 201, t=t
    )
    stem = f"example2_t{t:g}"
    rp.write_raster_csv(grid, OUT / f"{stem}.csv")
    rp.write_raster_pgm(grid, OUT / f"{stem}.pgm")
    # locate the centroid of the excluded region to show the motion
    import numpy as np

    excluded = ~grid.member
    xs, ys = np.meshgrid(grid.axes[0], grid.axes[1], indexing="ij")
    cx = float(xs[excluded].mean())
    cy = float(ys[excluded].mean())
    print(
        f"t={t:<4} member fraction {grid.member.mean():.3f}, "
        f"excluded-region centroid ({cx:+.2f}, {cy:+.2f})  -> {stem}.csv/.pgm"
    )

print(f"\nrasters written to {OUT}")
