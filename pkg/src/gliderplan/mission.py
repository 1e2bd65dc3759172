"""Mission configuration (XML) and result serialization (XML/CSV).

The mission file initializes every module of the planner; the identified
path is stored back as XML after a search. The schema is documented in
the README; every element is optional and falls back to the documented
defaults, unknown elements and attributes are rejected.
"""

import csv
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .cost import IntegrationParams, VehicleParams
from .engine import EngineConfig
from .errors import ConfigError, ParameterError
from .grid import GridSpec
from .ocean import (FlowEnvironment, JetParams, MODES, SurfaceCurrentParams)
from .profiles import DiveProfileParams
from .search import Leg, PathResult


@dataclass(frozen=True)
class MissionConfig:
    env: FlowEnvironment
    vehicle: VehicleParams
    integration: IntegrationParams
    grid: GridSpec
    profile_params: DiveProfileParams
    start: tuple
    goal: tuple
    t0: float
    engine: EngineConfig
    auto_sleep: bool
    run_mode: str


def _parse_bool(text):
    low = text.strip().lower()
    if low in ("true", "1", "yes"):
        return True
    if low in ("false", "0", "no"):
        return False
    raise ValueError("not a boolean: %r" % text)


def _attrs(el, schema):
    """Attribute dict per schema {name: (converter, default)}; rejects
    unknown attribute names."""
    for key in el.attrib:
        if key not in schema:
            raise ConfigError("<%s>: unknown attribute %r" % (el.tag, key))
    out = {}
    for name, (conv, default) in schema.items():
        raw = el.attrib.get(name)
        if raw is None:
            out[name] = default
        else:
            try:
                out[name] = conv(raw)
            except ValueError as exc:
                raise ConfigError("<%s %s=%r>: %s" % (el.tag, name, raw, exc))
    return out


def _build(factory, element_name, **kwargs):
    try:
        return factory(**kwargs)
    except ParameterError as exc:
        raise ConfigError("<%s>: %s" % (element_name, exc))


_DEFAULT_GRID = dict(x_min=0.0, x_max=8.0, y_min=-2.5, y_max=2.5,
                     h=0.4, sector_order=3)
_DEFAULT_PROFILES = dict(z_min=0.0, z_max=200.0, z_climb_to_max=40.0,
                         d_min_range=50.0, n_climb_levels=4, n_dive_levels=6)


def parse_mission(path):
    """Parse and validate a mission XML file into a MissionConfig."""
    try:
        tree = ET.parse(path)
    except (ET.ParseError, OSError) as exc:
        raise ConfigError("cannot parse mission file %s: %s" % (path, exc))
    root = tree.getroot()
    if root.tag != "mission":
        raise ConfigError("root element must be <mission>, got <%s>" % root.tag)

    children = {}
    for child in root:
        if child.tag in children:
            raise ConfigError("duplicate element <%s>" % child.tag)
        children[child.tag] = child
    known = {"flow", "vehicle", "integration", "grid", "dive_profiles",
             "start", "goal", "search", "engine", "run"}
    for tag in children:
        if tag not in known:
            raise ConfigError("unknown element <%s>" % tag)

    # flow
    jet = JetParams()
    surface = SurfaceCurrentParams()
    mode, ux, uy = "full", 0.0, 0.0
    flow_el = children.get("flow")
    if flow_el is not None:
        fa = _attrs(flow_el, {"mode": (str, "full"),
                              "ux": (float, 0.0), "uy": (float, 0.0)})
        mode, ux, uy = fa["mode"], fa["ux"], fa["uy"]
        for child in flow_el:
            if child.tag == "jet":
                ja = _attrs(child, {"B0": (float, 1.2), "epsilon": (float, 0.3),
                                    "omega": (float, 0.4),
                                    "theta": (float, math.pi / 2),
                                    "k": (float, 0.84), "c": (float, 0.12)})
                jet = _build(JetParams, "jet", **ja)
            elif child.tag == "surface":
                sa = _attrs(child, {"W0": (float, 0.5), "d": (float, 2.0),
                                    "z_decay": (float, 15.0)})
                surface = _build(SurfaceCurrentParams, "surface", **sa)
            else:
                raise ConfigError("unknown element <%s> inside <flow>" % child.tag)
        if mode not in MODES:
            raise ConfigError("<flow>: unknown mode %r" % mode)
    env = _build(FlowEnvironment, "flow", jet=jet, surface=surface,
                 mode=mode, ux=ux, uy=uy)

    def leaf(tag, schema, factory):
        el = children.get(tag)
        if el is None:
            return _build(factory, tag,
                          **{k: d for k, (_conv, d) in schema.items()})
        if len(el):
            raise ConfigError("<%s> takes no child elements" % tag)
        return _build(factory, tag, **_attrs(el, schema))

    vehicle = leaf("vehicle", {"v_bf": (float, 0.5), "w_vert": (float, 100.0)},
                   VehicleParams)
    integration = leaf("integration",
                       {"dt": (float, 0.01), "max_steps": (int, 1_000_000),
                        "eps_speed": (float, 1e-6)}, IntegrationParams)
    grid = leaf("grid", {k: (int if k == "sector_order" else float, v)
                         for k, v in _DEFAULT_GRID.items()}, GridSpec)
    profile_params = leaf(
        "dive_profiles",
        {k: (int if k.startswith("n_") else float, v)
         for k, v in _DEFAULT_PROFILES.items()}, DiveProfileParams)

    def point(tag, default):
        el = children.get(tag)
        if el is None:
            return default
        pa = _attrs(el, {"x": (float, default[0]), "y": (float, default[1])})
        return (pa["x"], pa["y"])

    start = point("start", (0.2, 0.0))
    goal = point("goal", (7.8, 0.0))

    t0 = 0.0
    search_el = children.get("search")
    if search_el is not None:
        t0 = _attrs(search_el, {"t0": (float, 0.0)})["t0"]

    engine_kwargs = {"n_workers": 4, "sleep_poll_interval": 0.1}
    auto_sleep = False
    engine_el = children.get("engine")
    if engine_el is not None:
        ea = _attrs(engine_el, {"n_workers": (int, 4),
                                "sleep_poll_interval_ms": (float, 100.0),
                                "auto_sleep": (_parse_bool, False)})
        engine_kwargs = {"n_workers": ea["n_workers"],
                         "sleep_poll_interval": ea["sleep_poll_interval_ms"] / 1e3}
        auto_sleep = ea["auto_sleep"]
    engine = _build(EngineConfig, "engine", **engine_kwargs)

    run_mode = "serial"
    run_el = children.get("run")
    if run_el is not None:
        run_mode = _attrs(run_el, {"mode": (str, "serial")})["mode"]
        if run_mode not in ("serial", "parallel"):
            raise ConfigError("<run>: mode must be 'serial' or 'parallel'")

    return MissionConfig(env=env, vehicle=vehicle, integration=integration,
                         grid=grid, profile_params=profile_params,
                         start=start, goal=goal, t0=t0, engine=engine,
                         auto_sleep=auto_sleep, run_mode=run_mode)


def write_path_xml(result, path):
    """Serialize a PathResult; float attributes use repr so the document
    round-trips bit-exactly and is byte-stable across runs."""
    lines = ['<?xml version="1.0" encoding="UTF-8"?>']
    lines.append('<path t0="%s" arrival="%s">' % (repr(result.t0),
                                                  repr(result.arrival)))
    for leg in result.legs:
        lines.append(
            '  <leg from="%d" to="%d" departure="%s" travel_time="%s" '
            'profile="%d"/>' % (leg.frm, leg.to, repr(leg.departure),
                                repr(leg.travel_time), leg.profile_index))
    lines.append('</path>')
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_path_xml(path):
    try:
        root = ET.parse(path).getroot()
    except (ET.ParseError, OSError) as exc:
        raise ConfigError("cannot parse path file %s: %s" % (path, exc))
    if root.tag != "path":
        raise ConfigError("root element must be <path>")
    legs = []
    for el in root:
        if el.tag != "leg":
            raise ConfigError("unknown element <%s> in path file" % el.tag)
        legs.append(Leg(int(el.attrib["from"]), int(el.attrib["to"]),
                        float(el.attrib["departure"]),
                        float(el.attrib["travel_time"]),
                        int(el.attrib["profile"])))
    return PathResult(legs, float(root.attrib["t0"]),
                      float(root.attrib["arrival"]))


def write_csv(path, header, rows):
    """CSV with a one-line header; floats written via repr."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(v) if isinstance(v, float) else v
                             for v in row])
