"""Time-varying-environment path planner for buoyancy-driven underwater
gliders, with per-edge dive-profile cost evaluation delegated to a
master/worker pool."""

from .cost import (EdgeCostResult, EdgeTask, IntegrationParams, VehicleParams,
                   edge_cost, sawtooth_depth, serial_evaluator, traverse_edge)
from .engine import (EngineConfig, TaskResult, WorkerPool, noop_run,
                     pool_evaluator, rounds_required, start_pool)
from .errors import ConfigError, EngineError, NoPathError, ParameterError
from .grid import (Edge, Graph, GridSpec, Node, build_grid, coprime_offsets,
                   insert_terminal)
from .mission import (MissionConfig, parse_mission, read_path_xml,
                      write_path_xml)
from .ocean import (FlowEnvironment, FlowSample, JetParams,
                    SurfaceCurrentParams, jet_velocity, meander_amplitude,
                    stream_function, surface_term, velocity)
from .profiles import DiveProfile, DiveProfileParams, generate_dive_profiles
from .search import Leg, PathResult, brute_force_plan, plan

__version__ = "0.1.0"
