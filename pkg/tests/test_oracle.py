import pytest

from chowprod.complexes import hypercube, product
from chowprod.errors import SizeLimitError
from chowprod.graphs import complete_graph, path_graph
from chowprod.oracle import (
    degree_oracle,
    graded_quotient,
    ideal_membership,
    monomial_basis,
)
from chowprod.poly import Poly, mono
from chowprod.ring import nd_presentation, relation_generators


def test_monomial_basis_counts():
    P = hypercube(1)
    assert len(monomial_basis(P, 1)) == 2
    assert len(monomial_basis(P, 2)) == 3
    K = product([complete_graph(3)])
    # the triple product of distinct vertices is not a simplex
    assert len(monomial_basis(K, 3)) == 10 - 1


def test_edge_quotients():
    P = hypercube(1)
    q1 = graded_quotient(P, 1)
    q2 = graded_quotient(P, 2)
    q3 = graded_quotient(P, 3)
    assert (q1.rank, q2.rank, q3.rank) == (2, 1, 0)
    assert q2.invariant_factors() == [1, 1]
    assert not q2.torsion()


def test_cube_top_and_above():
    for d in (1, 2, 3):
        H = hypercube(d)
        assert graded_quotient(H, d + 1).rank == 1
        assert graded_quotient(H, d + 2).rank == 0


def test_quotient_rank_counts_cubes():
    for factors in ([complete_graph(2), complete_graph(3)], [path_graph(3), path_graph(3)]):
        P = product(factors)
        q = graded_quotient(P, P.d + 1)
        assert q.rank == len(P.cubes())
        assert not q.torsion()


def test_quotient_matches_presentation():
    P = product([complete_graph(2), complete_graph(3)])
    for k in range(0, P.d + 1):
        q = graded_quotient(P, k + 1)
        pres = nd_presentation(P, k)
        assert q.rank == pres.free_rank
        assert sorted(x for x in q.invariant_factors() if x != 1) == \
            sorted(x for x in pres.invariant_factors() if x != 1)


def test_membership_examples():
    P = hypercube(2)
    for g in relation_generators(P, "R3"):
        assert ideal_membership(P, g.poly)
    for g in relation_generators(P, "Rtilde", 3):
        assert ideal_membership(P, g.poly)
    top = P.enumerate_simplices(2)[0]
    assert not ideal_membership(P, Poly.monomial(mono(*top)))


def test_degree_oracle_values():
    P = hypercube(2)
    top = tuple(sorted(P.enumerate_simplices(2)[0]))
    assert degree_oracle(P, top) == 1
    assert degree_oracle(P, mono((0, 0), (0, 0), (0, 0))) == 1
    assert degree_oracle(P, mono((0, 0), (0, 0), (1, 1))) == -1
    E = hypercube(1)
    assert degree_oracle(E, mono((0,), (0,))) == -1
    assert degree_oracle(E, mono((0,), (1,))) == 1


def test_degree_oracle_linear():
    P = hypercube(2)
    ms = [mono((0, 0), (1, 0), (1, 1)), mono((0, 0), (0, 1), (1, 1))]
    assert degree_oracle(P, ms[0]) == degree_oracle(P, ms[1]) == 1


def test_size_limit():
    P = product([complete_graph(3), complete_graph(3), complete_graph(3)])
    with pytest.raises(SizeLimitError):
        graded_quotient(P, 4, max_cells=10)


def test_vector_reduce_consistency():
    P = hypercube(1)
    q = graded_quotient(P, 2)
    p = Poly.monomial(mono((0,), (0,))) + Poly.monomial(mono((0,), (1,)))
    assert q.contains_poly(p)
    assert q.reduce_poly(p) == (0, 0, 0)
    assert q.vector(p) == [1, 1, 0]
