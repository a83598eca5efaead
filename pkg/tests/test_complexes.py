import math

import pytest

from chowprod.complexes import hypercube, product, sub_complex
from chowprod.errors import GraphInputError
from chowprod.graphs import complete_graph, path_graph


def test_cube_counts():
    for d in (1, 2, 3):
        H = hypercube(d)
        assert len(H.vertices()) == 2 ** d
        assert len(H.cubes()) == 1


def test_k2_k3_product():
    P = product([complete_graph(2), complete_graph(3)])
    assert len(P.vertices()) == 6
    assert len(P.cubes()) == 3


def test_single_factor():
    P = product([complete_graph(3)])
    assert P.d == 1
    assert len(P.cubes()) == 3
    assert sorted(P.vertices()) == [(0,), (1,), (2,)]


def test_cube_count_is_edge_product():
    P = product([path_graph(3), complete_graph(3), complete_graph(2)])
    assert len(P.cubes()) == 2 * 3 * 1


def test_triple_in_k3_not_simplex():
    P = product([complete_graph(3)])
    assert not P.is_simplex([(0,), (1,), (2,)])
    assert P.is_simplex([(0,), (1,)])
    assert P.is_simplex([(0,), (2,)])


def test_square_simplices():
    H = hypercube(2)
    assert H.is_simplex([(0, 0), (1, 0), (1, 1)])
    assert not H.is_simplex([(1, 0), (0, 1)])
    # repeated vertices are fine, a simplex may be degenerate
    assert H.is_simplex([(0, 0), (0, 0), (1, 1)])


def test_moving_coordinates_must_be_disjoint():
    # both steps are 1-simplices but coordinate 1 moves twice
    P = product([path_graph(3), complete_graph(2)])
    assert not P.is_simplex([(0, 0), (1, 0), (2, 0)])


def test_enumerate_counts():
    H = hypercube(2)
    assert len(H.enumerate_simplices(2)) == 2
    for d in (1, 2, 3):
        assert len(hypercube(d).enumerate_simplices(d)) == math.factorial(d)
    K = product([complete_graph(2)])
    assert K.enumerate_simplices(5) == ()


def test_top_simplices_lie_in_cubes():
    P = product([path_graph(3), complete_graph(3)])
    for ch in P.enumerate_simplices(P.d):
        assert any(all(P.cube_contains(c, v) for v in ch) for c in P.cubes())


def test_step_moves():
    H = hypercube(2)
    assert H.step_moves((0, 0), (1, 1)) == (0, 1)
    assert H.step_moves((0, 0), (1, 0)) == (0,)
    assert H.step_moves((0, 0), (0, 0)) == ()


def test_interval_set():
    H = hypercube(2)
    assert H.interval_set((0, 0), (1, 1)) == {1, 2}
    assert H.interval_set((0, 0), (0, 0)) == set()
    assert H.interval_set((0, 0), (1, 0)) == {1}


def test_cube_adjacencies():
    P = product([path_graph(3)])
    adj = P.cube_adjacencies()
    assert len(adj) == 1
    P2 = hypercube(2)
    assert P2.cube_adjacencies() == ()
    P3 = product([complete_graph(3)])
    assert len(P3.cube_adjacencies()) == 3


def test_cube_bits_roundtrip():
    P = product([path_graph(3), complete_graph(2)])
    for c in P.cubes():
        for v in P.cube_vertices(c):
            bits = P.cube_bits(c, v)
            assert P.cube_vertex(c, bits) == v


def test_sub_complex_vertices():
    P = product([complete_graph(3), complete_graph(2)])
    S = sub_complex(P, [[0, 1], [0, 1]])
    assert len(S.vertices()) == 4
    Q = product([path_graph(3), complete_graph(2)])
    with pytest.raises(GraphInputError):
        sub_complex(Q, [[0, 2], [0, 1]])


def test_chain_support_orders_and_counts():
    H = hypercube(2)
    sup = H.chain_support([(1, 1), (0, 0), (0, 0)])
    assert sup == (((0, 0), (1, 1)), (2, 1))
    assert H.chain_support([(1, 0), (0, 1)]) is None
