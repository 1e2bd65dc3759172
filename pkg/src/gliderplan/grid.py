"""Rectangular multi-sector grid graph over the mission region.

Nodes sit on a regular lattice; each node connects to every neighbor at a
coprime lattice offset with Chebyshev radius <= sector_order, giving a
distinct edge heading per ring (32 directions for order 3). Start/goal
terminals are inserted off-lattice and linked to nearby grid nodes.
"""

import math
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    h: float = 0.4
    sector_order: int = 3

    def __post_init__(self):
        if not self.x_max > self.x_min or not self.y_max > self.y_min:
            raise ParameterError("grid bounding box is empty")
        if not self.h > 0:
            raise ParameterError("grid size h must be > 0")
        if self.sector_order < 1:
            raise ParameterError("sector_order must be >= 1")
        nx = int(math.floor((self.x_max - self.x_min) / self.h + 1e-9)) + 1
        ny = int(math.floor((self.y_max - self.y_min) / self.h + 1e-9)) + 1
        if nx < 2 or ny < 2:
            raise ParameterError("bounding box too small for a 2x2 lattice")


@dataclass(frozen=True)
class Node:
    id: int
    x: float
    y: float


@dataclass(frozen=True)
class Edge:
    """Directed edge with a full geometry snapshot so cost evaluation
    needs no access to the graph."""

    frm: int
    to: int
    x0: float
    y0: float
    x1: float
    y1: float
    length: float
    dx: float
    dy: float


class Graph:
    """Immutable after construction except for terminal insertion."""

    def __init__(self, spec):
        self.spec = spec
        self.nodes = []
        self.adj = []
        self.start_id = None
        self.goal_id = None

    def add_node(self, x, y):
        node = Node(len(self.nodes), x, y)
        self.nodes.append(node)
        self.adj.append([])
        return node.id

    def add_edge(self, a, b):
        na, nb = self.nodes[a], self.nodes[b]
        ex, ey = nb.x - na.x, nb.y - na.y
        length = math.hypot(ex, ey)
        if length == 0.0:
            raise ParameterError("zero-length edge")
        self.adj[a].append(
            Edge(a, b, na.x, na.y, nb.x, nb.y, length, ex / length, ey / length)
        )

    def edges(self):
        for lst in self.adj:
            yield from lst

    def n_edges(self):
        return sum(len(lst) for lst in self.adj)


def coprime_offsets(s):
    """Lattice offsets (di, dj) with Chebyshev radius <= s and
    gcd(|di|, |dj|) = 1, in lexicographic order."""
    out = []
    for di in range(-s, s + 1):
        for dj in range(-s, s + 1):
            if (di, dj) == (0, 0):
                continue
            if math.gcd(abs(di), abs(dj)) != 1:
                continue
            out.append((di, dj))
    return out


def build_grid(spec):
    """Grid graph over the bounding box; node ids row-major from
    (x_min, y_min), edge lists ordered by the offset table."""
    g = Graph(spec)
    nx = int(math.floor((spec.x_max - spec.x_min) / spec.h + 1e-9)) + 1
    ny = int(math.floor((spec.y_max - spec.y_min) / spec.h + 1e-9)) + 1
    for j in range(ny):
        for i in range(nx):
            g.add_node(spec.x_min + i * spec.h, spec.y_min + j * spec.h)
    offsets = coprime_offsets(spec.sector_order)
    for j in range(ny):
        for i in range(nx):
            a = j * nx + i
            for di, dj in offsets:
                ii, jj = i + di, j + dj
                if 0 <= ii < nx and 0 <= jj < ny:
                    g.add_edge(a, jj * nx + ii)
    g._nx = nx
    g._ny = ny
    return g


def insert_terminal(g, x, y, role):
    """Add a start or goal node at (x, y), linked both ways to all grid
    nodes within Euclidean radius sector_order * h (coincident nodes are
    skipped). Returns the new node id."""
    spec = g.spec
    if not (spec.x_min <= x <= spec.x_max and spec.y_min <= y <= spec.y_max):
        raise ParameterError("terminal (%g, %g) outside the bounding box" % (x, y))
    if role not in ("start", "goal"):
        raise ParameterError("terminal role must be 'start' or 'goal'")
    n_grid = g._nx * g._ny
    radius = spec.sector_order * spec.h
    tid = g.add_node(x, y)
    linked = 0
    for node in g.nodes[:n_grid]:
        dist = math.hypot(node.x - x, node.y - y)
        if dist == 0.0 or dist > radius:
            continue
        g.add_edge(tid, node.id)
        g.add_edge(node.id, tid)
        linked += 1
    if linked == 0:
        raise ParameterError("no grid node within radius of terminal (%g, %g)" % (x, y))
    if role == "start":
        g.start_id = tid
    else:
        g.goal_id = tid
    return tid


def degree_histogram(g):
    hist = {}
    for lst in g.adj:
        hist[len(lst)] = hist.get(len(lst), 0) + 1
    return dict(sorted(hist.items()))


def graph_stats_rows(g):
    """CSV-ready (key, value) statistics rows."""
    rows = [("nodes", len(g.nodes)), ("edges", g.n_edges())]
    for deg, count in degree_histogram(g).items():
        rows.append(("degree_%d" % deg, count))
    return rows
