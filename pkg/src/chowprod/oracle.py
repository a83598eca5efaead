"""Brute-force integer-lattice ground truth.

The graded quotient in a fixed degree is computed directly from the
defining relations: the basis is every simplex-supported monomial of that
degree, the relation lattice is spanned by all vertex-sum and matching-sum
generators times all simplex-supported cofactors, with non-simplex
monomials deleted.  Everything downstream (normal forms, degrees, the
structure presentation, gluing, the dual presentation) is checked against
the answers produced here.
"""

from fractions import Fraction
from math import gcd

from .errors import OracleError, SizeLimitError
from .poly import Poly
from .ring import is_simplex_monomial, reduce_mod_I1

DEFAULT_MAX_CELLS = 20000


def monomial_basis(complex, degree):
    """Simplex-supported monomials of the given degree, deterministic."""
    if degree == 0:
        return ((),)
    chains = complex.enumerate_simplices(degree - 1, nondegenerate=False)
    return tuple(tuple(sorted(ch)) for ch in chains)


class QuotientStructure:
    """ZZ^basis modulo the degree slice of the relation ideal."""

    def __init__(self, complex, degree, basis, lattice):
        self.complex = complex
        self.degree = degree
        self.basis = basis
        self.index = {m: i for i, m in enumerate(basis)}
        self.lattice = lattice

    @property
    def rank(self):
        return len(self.basis) - self.lattice.rank

    def invariant_factors(self):
        """Invariant factors of the relation lattice inside ZZ^basis.

        A Hermite pivot product of 1 bounds the product of all invariant
        factors, so the Smith computation is only needed otherwise.
        """
        if self.lattice.rank == 0:
            return []
        if self.lattice.pivot_product() == 1:
            return [1] * self.lattice.rank
        from .lattice import invariant_factors

        return invariant_factors(self.lattice.basis(), len(self.basis))

    def torsion(self):
        return [f for f in self.invariant_factors() if f != 1]

    def vector(self, p):
        """Coordinates of a polynomial after deleting non-simplex terms."""
        row = [0] * len(self.basis)
        for m, c in p.terms.items():
            i = self.index.get(m)
            if i is not None:
                row[i] = c
        return row

    def reduce_poly(self, p):
        return tuple(self.lattice.reduce_vector(self.vector(p)))

    def contains_poly(self, p):
        return not any(self.reduce_poly(p))

    def smith(self):
        """Full verified Smith data of the canonical lattice basis."""
        from .lattice import smith_normal_form

        B = self.lattice.basis()
        D, U, V = smith_normal_form(B, len(self.basis))
        _assert_product(U, B, V, D)
        return D, U, V


def _assert_product(U, B, V, D):
    m = len(B)
    n = len(B[0]) if B else 0
    UB = [[sum(U[i][t] * B[t][j] for t in range(m)) for j in range(n)] for i in range(m)]
    UBV = [[sum(UB[i][t] * V[t][j] for t in range(n)) for j in range(n)] for i in range(m)]
    assert UBV == D, "transform product mismatch"


def graded_quotient(complex, degree, max_cells=DEFAULT_MAX_CELLS):
    """Quotient structure of the degree slice, cached per complex."""
    key = ("oracle_quotient", degree)
    if key in complex._cache:
        return complex._cache[key]
    assert degree >= 0
    basis = monomial_basis(complex, degree)
    if len(basis) > max_cells:
        raise SizeLimitError(
            "degree %d needs %d columns, limit %d" % (degree, len(basis), max_cells)
        )
    index = {m: i for i, m in enumerate(basis)}
    from .lattice import RowLattice

    lattice = RowLattice(len(basis))

    def insert_sum(product_monomial, matcher):
        row = [0] * len(basis)
        for v in complex.vertices():
            if matcher(v):
                i = index.get(tuple(sorted(product_monomial + (v,))))
                if i is not None:
                    row[i] += 1
        if any(row):
            lattice.insert(row)

    if degree >= 2:
        seen = set()
        for m in monomial_basis(complex, degree - 2):
            for u in complex.vertices():
                full = tuple(sorted(m + (u,)))
                if full in seen:
                    continue
                seen.add(full)
                insert_sum(full, lambda v: True)
    if degree >= 3:
        seen = set()
        for m in monomial_basis(complex, degree - 3):
            for u in complex.vertices():
                for w in complex.vertices():
                    if u == w:
                        continue
                    full = tuple(sorted(m + (u, w)))
                    for i0 in range(complex.d):
                        if u[i0] == w[i0]:
                            continue
                        dkey = (full, i0, u[i0])
                        if dkey in seen:
                            continue
                        seen.add(dkey)
                        insert_sum(full, lambda v, i0=i0, a=u[i0]: v[i0] == a)
    out = QuotientStructure(complex, degree, basis, lattice)
    complex._cache[key] = out
    return out


def ideal_membership(complex, p, max_cells=DEFAULT_MAX_CELLS):
    """True iff a homogeneous polynomial lies in the relation ideal."""
    if not p:
        return True
    degree = p.degree()
    assert p.is_homogeneous(degree), "membership is tested degree by degree"
    if degree == 0:
        return False
    if not reduce_mod_I1(complex, p):
        return True
    return graded_quotient(complex, degree, max_cells).contains_poly(p)


def _staircase(complex):
    """The identity staircase: flip factor edges to their upper ends one
    coordinate at a time."""
    for g in complex.factors:
        assert len(g.edges) == 1, "staircase needs a single-cube complex"
    lo = tuple(g.edges[0][0] for g in complex.factors)
    hi = tuple(g.edges[0][1] for g in complex.factors)
    chain = [lo]
    for t in range(complex.d):
        chain.append(hi[: t + 1] + lo[t + 1 :])
    return tuple(sorted(chain))


def _degree_functional(complex, max_cells):
    """Primitive integer functional vanishing on the top-degree relation
    lattice, with the staircase index; certified rank-1 free."""
    key = ("oracle_degree_functional",)
    if key in complex._cache:
        return complex._cache[key]
    d = complex.d
    if d > 4:
        raise OracleError("degree solving is supported for at most 4 factors")
    q = graded_quotient(complex, d + 1, max_cells)
    n = len(q.basis)
    if n - q.lattice.rank != 1:
        raise OracleError(
            "top degree quotient has rank %d, expected 1" % (n - q.lattice.rank)
        )
    if q.torsion():
        raise OracleError("top degree quotient has torsion %r" % (q.torsion(),))
    rows = q.lattice.basis()
    pivots = q.lattice.pivots()
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    assert len(free) == 1
    phi = [Fraction(0)] * n
    phi[free[0]] = Fraction(1)
    for row, c in sorted(zip(rows, pivots), key=lambda rc: -rc[1]):
        s = Fraction(0)
        for j in range(c + 1, n):
            if row[j] and phi[j]:
                s += Fraction(row[j]) * phi[j]
        phi[c] = -s / Fraction(row[c])
    denom = 1
    for x in phi:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in phi]
    g = 0
    for x in ints:
        g = gcd(g, x)
    assert g
    ints = [x // g for x in ints]
    for row in rows:
        assert sum(a * b for a, b in zip(row, ints)) == 0, "functional misses the lattice"
    i0 = q.index[_staircase(complex)]
    if abs(ints[i0]) != 1:
        raise OracleError("staircase class is not a generator: functional value %d" % ints[i0])
    result = (ints, i0, q)
    complex._cache[key] = result
    return result


def degree_oracle(complex, m, max_cells=DEFAULT_MAX_CELLS):
    """Solve m = c * staircase modulo the top-degree relation lattice.

    m may be a monomial of degree d+1 or a homogeneous polynomial of that
    degree; the solve extends linearly.  The answer is double-checked by an
    explicit membership test.
    """
    if isinstance(m, Poly):
        p = m
    else:
        p = Poly.monomial(tuple(m))
    if not p:
        return 0
    d = complex.d
    assert p.is_homogeneous(d + 1), "degree solving wants the top graded piece"
    phi, i0, q = _degree_functional(complex, max_cells)
    vec = q.vector(p)
    num = sum(a * b for a, b in zip(phi, vec))
    den = phi[i0]
    if num % den:
        raise OracleError("degree %r is not an integer multiple" % ((num, den),))
    c = num // den
    check = list(vec)
    check[i0] -= c
    if not q.lattice.contains(check):
        raise OracleError("solved degree fails the membership check")
    return c
