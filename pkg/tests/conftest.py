import math
from pathlib import Path

import pytest

import gliderplan as gp

REPO_ROOT = Path(__file__).resolve().parents[1]
EXAMPLE_MISSION = REPO_ROOT / "missions" / "example.xml"


@pytest.fixture
def paper_profile_params():
    return gp.DiveProfileParams(0.0, 200.0, 40.0, 50.0, 4, 6)


@pytest.fixture
def default_env():
    return gp.FlowEnvironment()


@pytest.fixture
def veh():
    return gp.VehicleParams()


@pytest.fixture
def integ():
    return gp.IntegrationParams()


@pytest.fixture
def example_mission():
    return str(EXAMPLE_MISSION)


def straight_edge(x0, y0, x1, y1, frm=0, to=1):
    """Free-standing edge with the geometry snapshot filled in."""
    length = math.hypot(x1 - x0, y1 - y0)
    return gp.Edge(frm, to, x0, y0, x1, y1, length,
                   (x1 - x0) / length, (y1 - y0) / length)


def adverse_surface_time(env):
    """A time at which the surface term is maximally adverse:
    cos(d * omega * t) = -1."""
    return math.pi / (env.surface.d * env.jet.omega)


def jet_core_y(x, t, jet):
    """y of the jet centerline at (x, t)."""
    return gp.meander_amplitude(t, jet) * math.cos(jet.k * (x - jet.c * t))
