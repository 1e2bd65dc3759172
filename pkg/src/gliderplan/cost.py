"""Edge traversal cost for a gliding vehicle.

Travel time along an edge is obtained by fixed-step simulation of the
vehicle holding the edge track through the current field while flying a
sawtooth depth trajectory. The per-edge cost is the minimum travel time
over a set of candidate dive profiles; each profile evaluation is an
independent work unit suitable for parallel delegation.
"""

import math
from dataclasses import dataclass

from .errors import ParameterError
from .ocean import velocity


@dataclass(frozen=True)
class VehicleParams:
    """v_bf: body-fixed horizontal speed (dimensionless); w_vert: vertical
    rate in m per unit dimensionless time."""

    v_bf: float = 0.5
    w_vert: float = 100.0

    def __post_init__(self):
        if not self.v_bf > 0:
            raise ParameterError("v_bf must be > 0")
        if not self.w_vert > 0:
            raise ParameterError("w_vert must be > 0")


@dataclass(frozen=True)
class IntegrationParams:
    dt: float = 0.01
    max_steps: int = 1_000_000
    eps_speed: float = 1e-6

    def __post_init__(self):
        if not self.dt > 0:
            raise ParameterError("dt must be > 0")
        if self.max_steps <= 0:
            raise ParameterError("max_steps must be > 0")
        if self.eps_speed < 0:
            raise ParameterError("eps_speed must be >= 0")


@dataclass(frozen=True)
class EdgeCostResult:
    """Minimum travel time over the profile set. Infeasible traversals are
    represented as None, never as a sentinel number."""

    best_time: object
    best_profile_index: object
    per_profile_times: tuple


@dataclass(frozen=True)
class EdgeTask:
    """Self-contained per-profile edge-cost work unit (value message)."""

    task_id: int
    edge: object
    t_start: float
    profile: object
    env: object
    veh: object
    integ: object

    def run(self):
        return traverse_edge(
            self.edge, self.t_start, self.profile, self.env, self.veh, self.integ
        )


def sawtooth_depth(t_rel, profile, w_vert):
    """Depth (m) at time t_rel after edge start: triangular wave from
    z_climb_to down to z_dive_to and back, starting in descent."""
    amp = profile.z_dive_to - profile.z_climb_to
    half = amp / w_vert
    phase = math.fmod(t_rel, 2.0 * half)
    if phase <= half:
        return profile.z_climb_to + w_vert * phase
    return profile.z_dive_to - w_vert * (phase - half)


def traverse_edge(edge, t_start, profile, env, veh, integ, trace=None):
    """Travel time along the edge for one dive profile, or None if the
    traversal is infeasible (track cannot be held, ground speed collapses,
    or the step budget is exhausted).

    The vehicle crabs to null cross-track drift, so the along-track ground
    speed is c_par + sqrt(v_bf^2 - c_perp^2). The final step is shortened
    exactly to terminate at the edge length. When trace is a list, a
    (t, s, x, y, z, u, v, g) row is appended per step.
    """
    v_bf = veh.v_bf
    w_vert = veh.w_vert
    dt = integ.dt
    eps = integ.eps_speed
    length = edge.length
    dx, dy = edge.dx, edge.dy
    x0, y0 = edge.x0, edge.y0
    s = 0.0
    elapsed = 0.0
    for _ in range(integ.max_steps):
        z = sawtooth_depth(elapsed, profile, w_vert)
        x = x0 + s * dx
        y = y0 + s * dy
        flow = velocity(x, y, z, t_start + elapsed, env)
        c_par = flow.u * dx + flow.v * dy
        c_perp = -flow.u * dy + flow.v * dx
        if abs(c_perp) >= v_bf:
            return None
        g = c_par + math.sqrt(v_bf * v_bf - c_perp * c_perp)
        if g <= eps:
            return None
        if trace is not None:
            trace.append((t_start + elapsed, s, x, y, z, flow.u, flow.v, g))
        remaining = length - s
        if g * dt >= remaining:
            return elapsed + remaining / g
        s += g * dt
        elapsed += dt
    return None


def serial_evaluator(tasks):
    """In-process evaluation of edge tasks, in task order."""
    return [task.run() for task in tasks]


def make_tasks(edge, t_start, profiles, env, veh, integ):
    return [
        EdgeTask(p.index, edge, t_start, p, env, veh, integ) for p in profiles
    ]


def edge_cost(edge, t_start, profiles, env, veh, integ, evaluator=None):
    """Minimum travel time over all profiles, lowest index on ties.

    The evaluator maps a task list to a time list ordered by task id; the
    result is identical regardless of the evaluation strategy.
    """
    if not profiles:
        raise ParameterError("profile set must be non-empty")
    if evaluator is None:
        evaluator = serial_evaluator
    times = evaluator(make_tasks(edge, t_start, profiles, env, veh, integ))
    best = None
    best_i = None
    for i, t in enumerate(times):
        if t is not None and (best is None or t < best):
            best = t
            best_i = i
    return EdgeCostResult(best, best_i, tuple(times))
