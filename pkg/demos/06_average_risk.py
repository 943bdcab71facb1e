"""The horizon-averaged risk bound for whole-trajectory coefficients.

Treating time as one more uniform random variable turns the two contour
constraints into two scalar inequalities on a polynomial trajectory's
coefficients, giving a feasibility test for the whole coefficient vector
at once.  The averaged bound is weaker than the pointwise-in-time one: it
only limits the risk averaged over the horizon, and it is conservative,
since the trajectory must keep the obstacle polynomial's value steady
enough over time for the variance-over-mean ratio to stay small.
"""

import pathlib

import riskplan as rp

HERE = pathlib.Path(__file__).resolve().parent

scenario = rp.parse_scenario(HERE.parent / "fixtures" / "example1.scn")
obstacle = scenario.obstacles[0]


def quadratic_through(control):
    """Degree-2 curve from (-1,-1) to (1,1) bent toward the control point."""
    a, b = (-1.0, -1.0), (1.0, 1.0)
    return {
        name: rp.UniPoly(
            (a[i], -2 * a[i] + 2 * control[i], a[i] - 2 * control[i] + b[i])
        )
        for i, name in enumerate(("x1", "x2"))
    }


cases = [
    ("wide detour (control (2, -2))", quadratic_through((2.0, -2.0))),
    ("mild detour (control (1, -1))", quadratic_through((1.0, -1.0))),
    ("straight through the center", {"x1": rp.UniPoly((-1.0, 2.0)), "x2": rp.UniPoly((-1.0, 2.0))}),
]

print(f"{'trajectory':<32} {'holds':>6} {'lhs variance':>13} {'lhs mean':>9} {'MC avg risk':>12}")
for label, curves in cases:
    check = rp.average_risk_bound(curves, obstacle, scenario.delta, 0.0, 1.0)
    traj = rp.Trajectory((rp.Segment(curves, 0.0, 1.0),))
    mc = rp.mc_trajectory_risk(traj, [obstacle], 1000, rp.McConfig(n=20_000, seed=3))
    print(
        f"{label:<32} {str(check.holds):>6} {check.lhs_variance:13.4f} "
        f"{check.lhs_mean:9.4f} {mc.profiles[0].average_risk:12.5f}"
    )

print()
print("Only trajectories that keep a steady distance profile satisfy the")
print("averaged bound; a low Monte Carlo average alone is not sufficient.")
