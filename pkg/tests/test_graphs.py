"""Graph construction, metrics and the spec mini-language."""

import pytest

from burngames.errors import GraphError
from burngames.graphs import (
    Graph,
    eccentricity_stats,
    from_edges,
    parse_graph_spec,
    path,
    strong_path,
    vertex_to_coord,
)


def edge_set(g: Graph) -> set[tuple[int, int]]:
    return {(v, w) for v in range(g.n) for w in g.adj[v] if v < w}


class TestPath:
    def test_single_vertex(self):
        g = path(1)
        assert g.n == 1
        assert edge_set(g) == set()

    def test_path4_edges(self):
        assert edge_set(path(4)) == {(0, 1), (1, 2), (2, 3)}

    def test_path9_diameter(self):
        assert eccentricity_stats(path(9)) == (4, 8)

    def test_rejects_zero(self):
        with pytest.raises(GraphError):
            path(0)


class TestStrongPath:
    def test_king3_center_degree(self):
        g = strong_path(3, 2)
        assert g.n == 9
        center = g.vertex_at((2, 2))
        assert g.degree(center) == 8

    def test_2_2_is_complete(self):
        g = strong_path(2, 2)
        assert all(g.degree(v) == 3 for v in range(4))

    def test_d1_is_path(self):
        assert edge_set(strong_path(5, 1)) == edge_set(path(5))

    def test_budget(self):
        with pytest.raises(GraphError, match="budget"):
            strong_path(101, 3, max_vertices=10**6)

    @pytest.mark.parametrize(
        "n,d",
        [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3), (2, 4), (12, 1), (44, 1)],
    )
    def test_distance_is_chebyshev(self, n, d):
        g = strong_path(n, d)
        assert n**d <= 2000
        for v in range(g.n):
            cv = vertex_to_coord(v, n, d)
            dist = g.distances_from(v)
            for w in range(g.n):
                cw = vertex_to_coord(w, n, d)
                assert dist[w] == max(abs(a - b) for a, b in zip(cv, cw))

    def test_coord_roundtrip(self):
        g = strong_path(4, 3)
        for v in range(g.n):
            assert g.vertex_at(g.coord_of(v)) == v


class TestEccentricity:
    def test_king3(self):
        assert eccentricity_stats(strong_path(3, 2)) == (1, 2)

    def test_complete4(self):
        assert eccentricity_stats(strong_path(2, 2)) == (1, 1)


class TestConstruction:
    def test_disconnected_rejected(self):
        with pytest.raises(GraphError, match="disconnected"):
            from_edges([(0, 1), (2, 3)])

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError):
            from_edges([(0, 0), (0, 1)])

    def test_asymmetric_rejected(self):
        with pytest.raises(GraphError, match="symmetric"):
            Graph([{1}, set()])

    def test_empty_rejected(self):
        with pytest.raises(GraphError):
            Graph([])


class TestSpecLanguage:
    def test_path_spec(self):
        g = parse_graph_spec("path:n=9")
        assert g.n == 9 and g.label == "path:n=9"

    def test_strongpath_spec(self):
        g = parse_graph_spec("strongpath:n=3,d=2")
        assert g.n == 9 and g.grid == (3, 2)

    def test_edges_spec(self):
        g = parse_graph_spec("edges:0-1,1-2,2-3")
        assert edge_set(g) == {(0, 1), (1, 2), (2, 3)}

    @pytest.mark.parametrize(
        "bad",
        [
            "path",
            "path:n=x",
            "path:m=3",
            "strongpath:n=3",
            "banana:n=3",
            "edges:0-1-2",
            "edges:zero-one",
        ],
    )
    def test_malformed(self, bad):
        with pytest.raises(GraphError):
            parse_graph_spec(bad)
