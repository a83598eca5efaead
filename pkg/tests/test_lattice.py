from hypothesis import given, settings, strategies as st

from chowprod.lattice import (
    RowLattice,
    backend_name,
    hermite_normal_form,
    invariant_factors,
    saturate_rows,
    smith_normal_form,
    unimodular_inverse,
    xgcd,
)

matrix_st = st.lists(
    st.lists(st.integers(min_value=-30, max_value=30), min_size=4, max_size=4),
    min_size=0,
    max_size=6,
)


def mat_mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def test_backend_reported():
    assert backend_name() in ("fast", "pure")


@given(st.integers(-500, 500), st.integers(-500, 500))
@settings(max_examples=200, deadline=None)
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g == abs(__import__("math").gcd(a, b))
    assert x * a + y * b == g


def test_hnf_identity():
    I = [[1, 0], [0, 1]]
    H, U = hermite_normal_form(I)
    assert H == I and U == I


def test_hnf_zero():
    H, U = hermite_normal_form([[0, 0, 0], [0, 0, 0]])
    assert H == [[0, 0, 0], [0, 0, 0]]
    lat = RowLattice(3)
    lat.insert([0, 0, 0])
    assert lat.rank == 0


def test_smith_2x2():
    D, U, V = smith_normal_form([[2, 4], [6, 8]])
    assert [D[0][0], D[1][1]] == [2, 4]
    assert mat_mul(mat_mul(U, [[2, 4], [6, 8]]), V) == D
    assert invariant_factors([[2, 4], [6, 8]], 2) == [2, 4]


@given(matrix_st)
@settings(max_examples=120, deadline=None)
def test_hnf_transform_and_shape(rows):
    H, U = hermite_normal_form(rows, 4)
    assert mat_mul(U, rows) == H if rows else H == []
    # pivot staircase: strictly increasing pivot columns, zero rows last
    pivots = []
    seen_zero = False
    for r in H:
        lead = next((j for j, x in enumerate(r) if x), None)
        if lead is None:
            seen_zero = True
        else:
            assert not seen_zero
            assert r[lead] > 0
            pivots.append(lead)
    assert pivots == sorted(pivots)
    for idx, c in enumerate(pivots):
        for other in range(idx):
            assert 0 <= H[other][c] < H[idx][c]


@given(matrix_st)
@settings(max_examples=80, deadline=None)
def test_smith_divisibility(rows):
    D, U, V = smith_normal_form(rows, 4)
    if rows:
        assert mat_mul(mat_mul(U, rows), V) == D
    diag = [D[t][t] for t in range(min(len(D), 4)) if D[t][t]]
    for a, b in zip(diag, diag[1:]):
        assert a > 0 and b % a == 0


@given(matrix_st, st.lists(st.integers(-5, 5), min_size=4, max_size=4))
@settings(max_examples=120, deadline=None)
def test_row_lattice_membership(rows, v):
    lat = RowLattice(4)
    lat.insert_all(rows)
    assert lat.rank == len(lat.basis())
    # every generator reduces to zero
    for r in rows:
        assert lat.reduce_vector(r) == [0, 0, 0, 0]
        assert lat.contains(r)
    red = lat.reduce_vector(v)
    assert lat.reduce_vector(red) == red
    assert lat.contains([a - b for a, b in zip(v, red)])
    # reduction is a coset invariant
    if rows:
        shifted = [a + b for a, b in zip(v, rows[0])]
        assert lat.reduce_vector(shifted) == red


@given(matrix_st)
@settings(max_examples=80, deadline=None)
def test_insert_reports_growth(rows):
    lat = RowLattice(4)
    grew = 0
    for r in rows:
        if lat.insert(r):
            grew += 1
    assert grew == lat.rank


def test_unimodular_inverse():
    V = [[1, 2, 0], [0, 1, 5], [0, 0, 1]]
    W = unimodular_inverse(V)
    n = len(V)
    assert mat_mul(V, W) == [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def test_saturate_doubles():
    # saturation of 2*Z^2 is Z^2; odd part of a mixed lattice
    assert saturate_rows([[2, 0], [0, 2]], 2) == [[1, 0], [0, 1]]
    assert saturate_rows([[2, 0], [0, 3]], 2) == [[1, 0], [0, 3]]
    assert saturate_rows([], 2) == []


@given(matrix_st)
@settings(max_examples=60, deadline=None)
def test_saturation_contains_and_odd_index(rows):
    sat = saturate_rows(rows, 4)
    lat = RowLattice(4)
    lat.insert_all(sat)
    for r in rows:
        assert lat.contains(r)
    # saturated lattice gains no new vectors after re-saturation
    assert saturate_rows(sat, 4) == sat
