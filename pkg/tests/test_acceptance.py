"""Acceptance suite: one test per criterion, one pass/fail line each."""

import math
import random
import statistics
import time
from dataclasses import dataclass

import pytest

import gliderplan as gp
from gliderplan.cli import main
from conftest import EXAMPLE_MISSION, adverse_surface_time, jet_core_y
from test_search import fifo_instances


def report(name, ok):
    print("ACCEPTANCE %-28s %s" % (name, "PASS" if ok else "FAIL"))
    assert ok


@dataclass(frozen=True)
class SleepTask:
    task_id: int
    duration: float

    def run(self):
        time.sleep(self.duration)
        return self.task_id


def test_criterion_1_dive_profile_count():
    params = gp.DiveProfileParams(0.0, 200.0, 40.0, 50.0, 4, 6)
    gp.generate_dive_profiles(params)  # warm-up
    start = time.perf_counter()
    profs = gp.generate_dive_profiles(params)
    elapsed = time.perf_counter() - start
    climb = sorted(set(p.z_climb_to for p in profs))
    dive = sorted(set(p.z_dive_to for p in profs))
    ok = (len(profs) == 20
          and climb == [0.0, 40.0 / 3.0, 80.0 / 3.0, 40.0]
          and dive == [50.0, 80.0, 110.0, 140.0, 170.0, 200.0]
          and elapsed < 1e-3)
    report("1 dive-profile count", ok)


def test_criterion_2_delegation_rounds():
    ok = (gp.rounds_required(20, 5) == 4
          and gp.rounds_required(20, 6) == 4
          and gp.rounds_required(20, 7) == 3
          and 20 - 2 * 7 == 6  # final of 3 rounds at 7 workers carries 6
          and gp.rounds_required(20, 10) == 2
          and gp.rounds_required(20, 20) == 1)
    report("2 delegation rounds", ok)


def test_criterion_3_speedup_step_structure():
    duration = 0.05
    n_tasks = 20
    sweep_start = time.perf_counter()

    def measure(k, repeat=3):
        # medians of repeats, matching the bench harness protocol
        samples = []
        for _ in range(repeat):
            with gp.WorkerPool(gp.EngineConfig(k)) as pool:
                tasks = [SleepTask(i, duration) for i in range(n_tasks)]
                t0 = time.perf_counter()
                pool.delegate(tasks)
                samples.append(time.perf_counter() - t0)
        return statistics.median(samples)

    ok = True
    for k in range(1, 25):
        wall = measure(k)
        expected = gp.rounds_required(n_tasks, k) * duration
        if abs(wall - expected) / expected > 0.20:
            ok = False
    wall_20 = measure(20)
    wall_47 = measure(47)
    if abs(wall_47 - wall_20) / wall_20 > 0.10:
        ok = False
    if time.perf_counter() - sweep_start > 120:
        ok = False
    report("3 speedup step structure", ok)


def test_criterion_4_flow_model_numerics():
    jet = gp.JetParams()
    env = gp.FlowEnvironment()
    rng = random.Random(2024)
    start = time.perf_counter()
    h = 1e-5
    ok = True
    for _ in range(1000):
        x, y, t = rng.uniform(0, 10), rng.uniform(-3, 3), rng.uniform(0, 25)
        fu = -(gp.stream_function(x, y + h, t, jet)
               - gp.stream_function(x, y - h, t, jet)) / (2 * h)
        fv = (gp.stream_function(x + h, y, t, jet)
              - gp.stream_function(x - h, y, t, jet)) / (2 * h)
        s = gp.jet_velocity(x, y, t, jet)
        if abs(s.u - fu) > 1e-5 * max(1.0, abs(fu)):
            ok = False
        if abs(s.v - fv) > 1e-5 * max(1.0, abs(fv)):
            ok = False
    hd = 1e-4
    for _ in range(1000):
        x, y = rng.uniform(0, 10), rng.uniform(-3, 3)
        z, t = rng.uniform(0, 100), rng.uniform(0, 25)
        dudx = (gp.velocity(x + hd, y, z, t, env).u
                - gp.velocity(x - hd, y, z, t, env).u) / (2 * hd)
        dvdy = (gp.velocity(x, y + hd, z, t, env).v
                - gp.velocity(x, y - hd, z, t, env).v) / (2 * hd)
        if abs(dudx + dvdy) >= 1e-6:
            ok = False
    if time.perf_counter() - start > 1.0:
        ok = False
    report("4 flow-model numerics", ok)


def test_criterion_5_search_optimality_oracle():
    start = time.perf_counter()
    ok = True
    for inst in fifo_instances(100, start_seed=0):
        g, t0, profiles, env, veh, integ = inst
        a = gp.plan(g, t0, profiles, env, veh, integ)
        b = gp.brute_force_plan(g, t0, profiles, env, veh, integ, max_hops=8)
        if abs(a.arrival - b.arrival) > 1e-9:
            ok = False
        elif a.node_sequence() != b.node_sequence():
            # differing routes are acceptable only as an exact-cost tie
            if abs(a.arrival - b.arrival) > 1e-9:
                ok = False
    if time.perf_counter() - start > 30.0:
        ok = False
    report("5 search optimality oracle", ok)


def test_criterion_6_determinism(tmp_path):
    mission = str(EXAMPLE_MISSION)
    contents = set()
    for run in range(5):
        out_s = tmp_path / ("s%d" % run)
        out_p = tmp_path / ("p%d" % run)
        assert main(["plan", "--mission", mission, "--serial",
                     "--out", str(out_s)]) == 0
        assert main(["plan", "--mission", mission, "--parallel",
                     "--workers", "4", "--out", str(out_p)]) == 0
        contents.add((out_s / "path.xml").read_bytes())
        contents.add((out_p / "path.xml").read_bytes())
    report("6 determinism", len(contents) == 1)


def test_criterion_7_depth_avoidance():
    env = gp.FlowEnvironment()
    veh = gp.VehicleParams()
    integ = gp.IntegrationParams()
    profiles = gp.generate_dive_profiles(
        gp.DiveProfileParams(0.0, 200.0, 40.0, 50.0, 4, 6))
    t_adv = adverse_surface_time(env)
    assert math.cos(env.surface.d * env.jet.omega * t_adv) <= -0.9
    y = jet_core_y(0.0, t_adv, env.jet)
    length = 0.4
    edge = gp.Edge(0, 1, 0.0, y, length, y, length, 1.0, 0.0)
    res = gp.edge_cost(edge, t_adv, profiles, env, veh, integ)
    with_surface_ok = profiles[res.best_profile_index].z_climb_to > 0.0
    res_jet = gp.edge_cost(edge, t_adv, profiles,
                           gp.FlowEnvironment(mode="jet"), veh, integ)
    without_surface_ok = (res_jet.best_profile_index == 0
                          and len(set(res_jet.per_profile_times)) == 1)
    report("7 depth avoidance", with_surface_ok and without_surface_ok)


def test_criterion_8_noop_overhead_measured_only(tmp_path):
    # absolute runtimes and energy are hardware-specific and explicitly
    # not reproduced; the overhead harness must only produce measured CSV
    out = tmp_path / "noop.csv"
    code = main(["noop", "--workers", "1,8,16", "--repeat", "1",
                 "--out", str(out)])
    lines = out.read_text().strip().splitlines()
    ok = (code == 0
          and lines[0] == "n_workers,phase,wall_ms"
          and len(lines) == 1 + 3 * 3
          and all(float(line.rsplit(",", 1)[1]) >= 0 for line in lines[1:]))
    report("8 noop measured CSV", ok)
