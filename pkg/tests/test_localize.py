import random

import pytest

from chowprod.complexes import hypercube, product
from chowprod.degree import total_degree
from chowprod.errors import GraphInputError, KernelConditionError
from chowprod.graphs import complete_graph, path_graph, subdivide
from chowprod.localize import (
    GraphHom,
    cube_key,
    facet_restrict,
    glue,
    j_map,
    moving_vertex_set,
    multiply_by_vertex,
    parse_cube_key,
    permute,
    pullback,
    restrict,
    restrict_tuple,
)
from chowprod.poly import Poly, mono
from chowprod.ring import chow_class, is_rationally_zero, relation_generators

C = Poly.variable


def test_cube_keys_roundtrip():
    P = product([path_graph(3), complete_graph(2)])
    for cube in P.cubes():
        assert parse_cube_key(P, cube_key(cube)) == cube
    with pytest.raises(GraphInputError):
        parse_cube_key(P, "0-1")
    with pytest.raises(GraphInputError):
        parse_cube_key(P, "0-2|0-1")


def test_restrict_generators():
    P = product([path_graph(3)])
    cube = ((0, 1),)
    assert restrict(P, C((0,)), cube) == C((0,))
    assert not restrict(P, C((2,)), cube)
    t = restrict_tuple(P, C((1,)) * C((1,)))
    assert set(t) == set(P.cubes())
    assert t[((0, 1),)] == C((1,)) ** 2


def test_facet_restrict():
    H = hypercube(2)
    cube = H.cubes()[0]
    p = C((0, 0)) * C((0, 1))
    assert facet_restrict(H, cube, 1, 0, p) == p
    assert not facet_restrict(H, cube, 1, 0, C((1, 0)))
    assert facet_restrict(H, cube, 2, 1, C((0, 1)) + C((1, 0))) == C((0, 1))


def test_j_map_zero_on_restrictions():
    P = product([path_graph(3), complete_graph(2)])
    p = (C((0, 0)) + C((1, 0)) + C((2, 1))) ** 2
    recs = j_map(P, restrict_tuple(P, p.graded_part(2)))
    assert recs
    for r in recs:
        assert r["class"].is_zero
        assert 1 <= r["coordinate"] <= P.d


def test_j_map_empty_on_single_cube():
    H = hypercube(2)
    assert j_map(H, restrict_tuple(H, C((0, 0)) * C((1, 1)))) == []


def test_j_map_polynomially_equal_tuple():
    # entries equal on facets as polynomials: differences vanish before
    # any class reduction
    P = product([path_graph(3)])
    t = {((0, 1),): C((1,)), ((1, 2),): C((1,))}
    for r in j_map(P, t):
        assert r["class"].is_zero


def test_glue_restrict_roundtrip():
    rng = random.Random(23)
    P = product([path_graph(3), complete_graph(3)])
    verts = sorted(P.vertices())
    for _ in range(25):
        deg = rng.randrange(2, P.d + 2)
        p = Poly.zero()
        for _ in range(4):
            m = mono(*(rng.choice(verts) for _ in range(deg)))
            p = p + Poly.monomial(m, rng.randrange(-3, 4))
        cls = chow_class(P, p, k=deg - 1)
        assert glue(P, restrict_tuple(P, p), k=deg - 1) == cls


def test_glue_path_edge_generators():
    # one generator per edge of the path glues to the class with degree 1
    # on every cube
    P = product([path_graph(3)])
    t = {((0, 1),): C((0,)) * C((1,)), ((1, 2),): C((1,)) * C((2,))}
    cls = glue(P, t)
    assert not cls.is_zero
    for cube, q in restrict_tuple(P, cls.to_poly()).items():
        sub = P.cube_complex(cube)
        assert total_degree(sub, q) == 1


def test_glue_kernel_violation_names_cubes():
    # adjacent cubes share an edge whose degree-2 class group is Z, so a
    # one-sided generator cannot be in the kernel
    P = product([path_graph(3), complete_graph(2)])
    c1 = ((0, 1), (0, 1))
    c2 = ((1, 2), (0, 1))
    t = {c1: C((1, 0)) * C((1, 1)), c2: Poly.zero()}
    with pytest.raises(KernelConditionError) as ei:
        glue(P, t, k=1)
    msg = str(ei.value)
    assert cube_key(c1) in msg and cube_key(c2) in msg


def test_glue_on_path_is_unconstrained_in_top_degree():
    # cubes of a path meet in points, whose degree-2 group vanishes, so any
    # per-edge assignment glues
    P = product([path_graph(3)])
    t = {((0, 1),): 3 * C((1,)) * C((1,)), ((1, 2),): Poly.zero()}
    cls = glue(P, t, k=1)
    got = [total_degree(P.cube_complex(cube), q)
           for cube, q in sorted(restrict_tuple(P, cls.to_poly()).items())]
    assert got == [-3, 0]


def test_glue_rejects_bad_tuples():
    P = product([path_graph(3)])
    with pytest.raises(GraphInputError):
        glue(P, {((0, 1),): C((2,))}, k=0)
    with pytest.raises(GraphInputError):
        glue(P, {((0, 2),): C((0,))}, k=0)
    with pytest.raises(GraphInputError):
        glue(P, {((0, 1),): Poly.zero()})


def test_pullback_identity():
    P = product([complete_graph(3)])
    hom = GraphHom(P, P, [{0: 0, 1: 1, 2: 2}])
    p = C((0,)) * C((1,)) - 2 * C((2,)) * C((2,))
    assert pullback(hom, p) == p


def test_pullback_collapse_sums_fiber():
    G = product([complete_graph(2)])
    S = product([subdivide(complete_graph(2), 2)])
    hom = GraphHom(S, G, [{0: 0, 1: 1, 2: 1}])
    assert pullback(hom, C((0,))) == C((0,))
    assert pullback(hom, C((1,))) == C((1,)) + C((2,))
    # pullback respects rational equivalence of the vertex sum relation
    for g in relation_generators(G, "R2"):
        assert is_rationally_zero(S, pullback(hom, g.poly))


def test_pullback_validates():
    G = product([complete_graph(3)])
    H = product([path_graph(3)])
    with pytest.raises(GraphInputError):
        GraphHom(H, G, [{0: 0, 1: 2, 2: 1}])
    with pytest.raises(GraphInputError):
        GraphHom(H, G, [{0: 0, 1: 1}])


def test_permute_identity_and_composition():
    P = product([complete_graph(2), complete_graph(3)])
    p = C((0, 2)) * C((1, 1))
    Q, q = permute(P, (1, 2), p)
    assert Q.signature() == P.signature() and q == p
    Q1, q1 = permute(P, (2, 1), p)
    Q2, q2 = permute(Q1, (2, 1), q1)
    assert Q2.signature() == P.signature() and q2 == p
    assert q1 == C((2, 0)) * C((1, 1))
    with pytest.raises(GraphInputError):
        permute(P, (1, 1), p)


def test_moving_set_and_multiplication():
    H = hypercube(2)
    ms = moving_vertex_set(H, (1, 1), 1)
    assert set(ms) == {(0, 0), (0, 1)}
    assert multiply_by_vertex(H, (1, 1), 1, Poly.constant(1)) == C((1, 1))
    with pytest.raises(GraphInputError):
        multiply_by_vertex(H, (1, 1), 1, C((1, 0)))


def test_multiplication_kills_sub_relations():
    # vertex sum relations of the lower slab stay relations after the
    # product with the top vertex
    H = hypercube(2)
    from chowprod.localize import cached_sub_complex

    sub = cached_sub_complex(H, [[0], [0, 1]])
    for g in relation_generators(sub, "R2"):
        q = multiply_by_vertex(H, (1, 1), 1, g.poly)
        assert is_rationally_zero(H, q)
