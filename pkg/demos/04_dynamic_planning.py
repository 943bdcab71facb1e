"""Risk-bounded planning among moving obstacles.

The dynamic planner fixes the number of linear pieces up front and grows
one layer of the tree per time slice; an edge joins layer i only if its
certificate holds over that slice's absolute clock interval, so timing is
part of every safety decision.  Two scenarios: the single moving circle,
and the delivery problem with three crossing discs where the straight
path is infeasible.
"""

import pathlib

import riskplan as rp

HERE = pathlib.Path(__file__).resolve().parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)


def run(name, segments, seed):
    scenario = rp.parse_scenario(HERE.parent / "fixtures" / f"{name}.scn")
    result = rp.plan_rrt_dynamic(
        scenario, rp.PlannerParams(seed=seed, segments=segments)
    )
    if not result.success:
        print(f"{name}: no solution within the iteration budget")
        return
    mc = rp.mc_trajectory_risk(
        result.trajectory, scenario.obstacles, 1000, rp.McConfig(n=20_000, seed=seed)
    )
    print(
        f"{name}: {segments} pieces, energy {result.energy:.3f}, "
        f"MC max risk {mc.max_risk:.5f} (budget {scenario.delta})"
    )
    waypoints = [result.trajectory.segments[0].position(result.trajectory.t0)]
    for seg in result.trajectory.segments:
        waypoints.append(seg.position(seg.t_end))
    pretty = " -> ".join("(" + ", ".join(f"{v:+.2f}" for v in w) + ")" for w in waypoints)
    print(f"  waypoints: {pretty}")
    rp.write_trajectory_csv(result.trajectory, OUT / f"{name}_plan.csv")


run("example4", segments=2, seed=1)
run("lanechange", segments=4, seed=1)
run("delivery", segments=4, seed=1)
run("cluttered3d", segments=4, seed=1)
print(f"\ntrajectories written to {OUT}")
