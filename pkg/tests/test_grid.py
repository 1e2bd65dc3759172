import math

import pytest

import gliderplan as gp
from gliderplan.grid import degree_histogram, graph_stats_rows


def interior_id(g, spec):
    # node closest to the box center
    cx = (spec.x_min + spec.x_max) / 2
    cy = (spec.y_min + spec.y_max) / 2
    return min(g.nodes, key=lambda n: (n.x - cx) ** 2 + (n.y - cy) ** 2).id


class TestOffsets:
    @pytest.mark.parametrize("s,count", [(1, 8), (2, 16), (3, 32)])
    def test_coprime_offset_counts(self, s, count):
        offsets = gp.coprime_offsets(s)
        assert len(offsets) == count
        assert len(set(offsets)) == count
        for di, dj in offsets:
            assert max(abs(di), abs(dj)) <= s
            assert math.gcd(abs(di), abs(dj)) == 1

    def test_lexicographic_order(self):
        offsets = gp.coprime_offsets(3)
        assert offsets == sorted(offsets)


class TestBuildGrid:
    @pytest.mark.parametrize("s,deg", [(1, 8), (2, 16), (3, 32)])
    def test_interior_degree(self, s, deg):
        spec = gp.GridSpec(0, 8, 0, 8, 1.0, s)
        g = gp.build_grid(spec)
        assert len(g.adj[interior_id(g, spec)]) == deg

    def test_node_count_and_row_major_order(self):
        spec = gp.GridSpec(0, 2, 0, 1, 0.5, 1)
        g = gp.build_grid(spec)
        assert len(g.nodes) == 5 * 3
        assert (g.nodes[0].x, g.nodes[0].y) == (0.0, 0.0)
        assert (g.nodes[1].x, g.nodes[1].y) == (0.5, 0.0)
        assert (g.nodes[5].x, g.nodes[5].y) == (0.0, 0.5)

    def test_edge_geometry(self):
        spec = gp.GridSpec(0, 4, 0, 4, 0.4, 3)
        g = gp.build_grid(spec)
        for e in g.edges():
            assert e.frm != e.to
            assert e.length > 0
            assert math.hypot(e.dx, e.dy) == pytest.approx(1.0, abs=1e-12)
            assert e.length <= 3 * 0.4 * math.sqrt(2) + 1e-12
        # offset (1, 2) at h = 0.4
        lengths = {round(e.length, 12) for e in g.adj[0]}
        assert round(0.4 * math.sqrt(5), 12) in lengths

    def test_adjacency_symmetric(self):
        g = gp.build_grid(gp.GridSpec(0, 2, 0, 2, 0.5, 2))
        pairs = {(e.frm, e.to) for e in g.edges()}
        assert all((b, a) in pairs for a, b in pairs)
        assert len(pairs) == g.n_edges()  # no duplicates

    def test_connected(self):
        g = gp.build_grid(gp.GridSpec(0, 1, 0, 1, 0.5, 1))
        seen = {0}
        stack = [0]
        while stack:
            for e in g.adj[stack.pop()]:
                if e.to not in seen:
                    seen.add(e.to)
                    stack.append(e.to)
        assert len(seen) == len(g.nodes)

    def test_deterministic_rebuild(self):
        spec = gp.GridSpec(-1, 3, -2, 2, 0.4, 3)
        a = gp.build_grid(spec)
        b = gp.build_grid(spec)
        assert a.nodes == b.nodes
        assert a.adj == b.adj

    def test_too_small_box_rejected(self):
        with pytest.raises(gp.ParameterError):
            gp.GridSpec(0, 0.3, 0, 0.3, 0.4, 3)


class TestInsertTerminal:
    def test_on_lattice_point(self):
        spec = gp.GridSpec(0, 8, 0, 8, 1.0, 3)
        g = gp.build_grid(spec)
        tid = gp.insert_terminal(g, 4.0, 4.0, "start")
        # lattice points within Euclidean radius 3h of the center,
        # excluding the coincident node: 28
        assert len(g.adj[tid]) == 28
        assert g.start_id == tid
        # bidirectional
        assert all(any(e.to == tid for e in g.adj[e2.to]) for e2 in g.adj[tid])

    def test_off_lattice(self):
        g = gp.build_grid(gp.GridSpec(0, 4, 0, 4, 0.4, 3))
        tid = gp.insert_terminal(g, 2.03, 1.97, "goal")
        assert g.goal_id == tid
        radius = 3 * 0.4
        for e in g.adj[tid]:
            assert e.length <= radius + 1e-12

    def test_corner_terminal(self):
        g = gp.build_grid(gp.GridSpec(0, 2, 0, 2, 0.5, 1))
        tid = gp.insert_terminal(g, 0.0, 0.0, "start")
        assert len(g.adj[tid]) >= 1

    def test_outside_box_rejected(self):
        g = gp.build_grid(gp.GridSpec(0, 2, 0, 2, 0.5, 1))
        with pytest.raises(gp.ParameterError):
            gp.insert_terminal(g, 3.0, 0.0, "start")

    def test_bad_role_rejected(self):
        g = gp.build_grid(gp.GridSpec(0, 2, 0, 2, 0.5, 1))
        with pytest.raises(gp.ParameterError):
            gp.insert_terminal(g, 1.0, 1.0, "midpoint")


class TestStats:
    def test_degree_histogram_and_rows(self):
        g = gp.build_grid(gp.GridSpec(0, 2, 0, 2, 1.0, 1))
        hist = degree_histogram(g)
        assert sum(hist.values()) == len(g.nodes)
        rows = graph_stats_rows(g)
        assert rows[0] == ("nodes", 9)
        assert rows[1][0] == "edges"
