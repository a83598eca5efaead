import pytest

from chowprod.errors import GraphInputError
from chowprod.graphs import (
    build_graph,
    complete_graph,
    cycle_graph,
    line_graph,
    path_graph,
    subdivide,
)


def test_k2():
    g = build_graph([0, 1], [(0, 1)])
    assert g.vertices == (0, 1)
    assert g.edges == ((0, 1),)
    assert g.pos(0) == 0 and g.pos(1) == 1


def test_k3():
    g = build_graph([0, 1, 2], [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3
    assert len(g.edges) == 3
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
    assert g == complete_graph(3)


def test_disconnected_rejected():
    with pytest.raises(GraphInputError):
        build_graph([0, 1, 2], [(0, 1)])


def test_loops_and_duplicates_rejected():
    with pytest.raises(GraphInputError):
        build_graph([0, 1], [(0, 0), (0, 1)])
    with pytest.raises(GraphInputError):
        build_graph([0, 0, 1], [(0, 1)])
    with pytest.raises(GraphInputError):
        build_graph([0, 1], [(0, 2)])


def test_edge_order_follows_vertex_order():
    # edges are stored low-high and sorted, independent of input order
    g = build_graph([2, 0, 1], [(1, 0), (2, 1)])
    assert g.vertices == (2, 0, 1)
    assert g.edges == ((2, 1), (0, 1))
    assert g.valence(1) == 2


def test_named_families():
    p = path_graph(4)
    assert p.edges == ((0, 1), (1, 2), (2, 3))
    c = cycle_graph(4)
    assert len(c.edges) == 4
    assert c.valence(0) == 2


def test_subdivide_k2_once():
    g = subdivide(complete_graph(2), 2)
    assert g == path_graph(3)


def test_subdivide_identity():
    g = complete_graph(3)
    h = subdivide(g, 1)
    assert h.n == 3 and len(h.edges) == 3
    assert h == complete_graph(3)


def test_subdivide_k3_twice():
    h = subdivide(complete_graph(3), 2)
    assert h.n == 6
    assert len(h.edges) == 6
    assert all(h.valence(v) == 2 for v in h.vertices)


def test_line_graph_path():
    assert line_graph(path_graph(3)) == complete_graph(2)


def test_line_graph_k3():
    assert line_graph(complete_graph(3)) == complete_graph(3)


def test_line_graph_star():
    star = build_graph([0, 1, 2, 3], [(0, 1), (0, 2), (0, 3)])
    assert line_graph(star) == complete_graph(3)


def test_line_graph_counts():
    for g in (path_graph(5), cycle_graph(5), complete_graph(4)):
        lg = line_graph(g)
        assert lg.n == len(g.edges)
        want = sum(g.valence(v) * (g.valence(v) - 1) // 2 for v in g.vertices)
        assert len(lg.edges) == want
