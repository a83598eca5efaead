"""The combinatorial Chow ring of a product of ordered graphs.

Z(G) is the polynomial ring on vertex classes C_v.  The graded quotient is
cut out by three relation families: non-simplex monomials (R1), the vertex
sums C_u * sum_v C_v (R2), and C_u C_w * sum over v matching u in one
coordinate where u and w differ (R3).  Every homogeneous element rewrites
onto the span of nondegenerate simplex monomials; the remaining relations
between those are spanned by inserting intermediate cube vertices into a
chain, one pair of moving coordinates at a time (the Rtilde rows).

All computations here are exact over the integers and produce replayable
certificates for the rewriting.
"""

from itertools import combinations, combinations_with_replacement
from itertools import product as iproduct

from .errors import GraphInputError
from .lattice import RowLattice, invariant_factors
from .poly import Poly


class RelationElement:
    """One generator of the relation ideal, tagged by kind and parameters.

    kinds: R1 (monomial,), R2 (u,), R3 (u, w, i) with i 1-based,
    Rtilde (sigma, i, j) with i, j 1-based moving coordinates of one step.
    """

    __slots__ = ("kind", "data", "poly")

    def __init__(self, kind, data, poly):
        self.kind = kind
        self.data = data
        self.poly = poly

    def key(self):
        return (self.kind, self.data)

    def __eq__(self, other):
        return isinstance(other, RelationElement) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "%s%r" % (self.kind, self.data)


def vertex_sum(complex):
    return Poly({(v,): 1 for v in complex.vertices()})


def monomial_support(complex, m):
    """Memoized chain_support for a canonical monomial."""
    cache = complex._cache.setdefault("mono_support", {})
    if m not in cache:
        cache[m] = complex.chain_support(m)
    return cache[m]


def is_simplex_monomial(complex, m):
    return monomial_support(complex, m) is not None


def is_nd_monomial(complex, m):
    sup = monomial_support(complex, m)
    return sup is not None and all(n == 1 for n in sup[1])


def reduce_mod_I1(complex, p):
    """Drop every monomial whose support is not a simplex."""
    return p.filter_monomials(lambda m: is_simplex_monomial(complex, m))


def r2_element(complex, u):
    return RelationElement("R2", (u,), Poly.variable(u) * vertex_sum(complex))


def r3_element(complex, u, w, i):
    """C_u C_w * sum over v with v_i = u_i; i is 1-based, u_i != w_i."""
    i0 = i - 1
    s = Poly({(v,): 1 for v in complex.vertices() if v[i0] == u[i0]})
    return RelationElement("R3", (u, w, i), Poly.variable(u) * Poly.variable(w) * s)


def step_cube_vertices(complex, u, v):
    """Vertices of the cube spanned by a strict 1-simplex step u < v."""
    moves = complex.step_moves(u, v)
    options = []
    for idx, c in enumerate(u):
        options.append([c, v[idx]] if idx in moves else [c])
    return list(iproduct(*options))


def rtilde_element(complex, sigma, a, b):
    """Insertion relation for a (k-1)-simplex sigma and 1-based moving
    coordinates a, b of one of its steps: sum of C_sigma C_w over cube
    vertices w of that step matching sigma's lower end in coordinate a,
    minus the same with b."""
    a0, b0 = a - 1, b - 1
    step = None
    for t in range(len(sigma) - 1):
        moves = complex.step_moves(sigma[t], sigma[t + 1])
        if a0 in moves:
            assert b0 in moves, "coordinates belong to different steps"
            step = t
            break
    assert step is not None, "coordinate does not move along the chain"
    u, v = sigma[step], sigma[step + 1]
    out = Poly()
    csig = Poly.monomial(tuple(sorted(sigma)))
    for w in step_cube_vertices(complex, u, v):
        if w[a0] == u[a0]:
            out = out + csig * Poly.variable(w)
        if w[b0] == u[b0]:
            out = out - csig * Poly.variable(w)
    return RelationElement("Rtilde", (tuple(sigma), a, b), out)


def relation_generators(complex, kind, degree_bound=None):
    """Exhaustive, deterministically ordered generator lists."""
    verts = complex.vertices()
    if kind == "R1":
        assert degree_bound is not None and degree_bound >= 2
        out = []
        for deg in range(2, degree_bound + 1):
            for m in combinations_with_replacement(sorted(verts), deg):
                if not is_simplex_monomial(complex, m):
                    out.append(RelationElement("R1", (m,), Poly.monomial(m)))
        return out
    if kind == "R2":
        return [r2_element(complex, u) for u in verts]
    if kind == "R3":
        out = []
        for u in verts:
            for w in verts:
                if u == w:
                    continue
                for i0 in range(complex.d):
                    if u[i0] != w[i0]:
                        out.append(r3_element(complex, u, w, i0 + 1))
        return out
    if kind == "Rtilde":
        assert degree_bound is not None and degree_bound >= 2
        k = degree_bound - 1
        out = []
        for sigma in complex.enumerate_simplices(k - 1):
            for t in range(len(sigma) - 1):
                moves = complex.step_moves(sigma[t], sigma[t + 1])
                for a0, b0 in combinations(moves, 2):
                    out.append(rtilde_element(complex, sigma, a0 + 1, b0 + 1))
        return out
    raise GraphInputError("unknown relation kind %r" % (kind,))


# ---- rewriting onto nondegenerate simplex monomials ----


def _rewrite_monomial(complex, m):
    """Returns (nd: Poly, cert: tuple of (coeff, cofactor, RelationElement))
    with C_m = nd + sum coeff * C_cofactor * element.poly, nd supported on
    nondegenerate simplex monomials."""
    cache = complex._cache.setdefault("rewrite", {})
    if m in cache:
        return cache[m]
    sup = monomial_support(complex, m)
    if sup is None:
        result = (Poly(), ((1, (), RelationElement("R1", (m,), Poly.monomial(m))),))
        cache[m] = result
        return result
    support, mult = sup
    if all(n == 1 for n in mult):
        result = (Poly.monomial(m), ())
        cache[m] = result
        return result
    if len(support) == 1:
        u = support[0]
        element = r2_element(complex, u)
        cofactor = tuple(sorted((u,) * (len(m) - 2)))
        children = [(-1, tuple(sorted(cofactor + (u, v)))) for v in complex.vertices() if v != u]
    else:
        h = None
        for idx in range(1, len(support)):
            if mult[idx] >= 2:
                h = idx
                break
        if h is not None:
            # repeated vertex with a predecessor: push it down across the
            # step below it
            target, anchor = support[h], support[h - 1]
            i0 = min(complex.step_moves(anchor, target))
        else:
            # only the bottom vertex repeats: push it up across the first step
            assert mult[0] >= 2
            target, anchor = support[0], support[1]
            i0 = min(complex.step_moves(target, anchor))
        element = r3_element(complex, target, anchor, i0 + 1)
        reduced = list(m)
        reduced.remove(target)
        cof = list(reduced)
        cof.remove(target)
        cof.remove(anchor)
        cofactor = tuple(sorted(cof))
        children = [
            (-1, tuple(sorted(reduced + [w])))
            for w in complex.vertices()
            if w != target and w[i0] == target[i0]
        ]
    nd = Poly()
    cert = [(1, cofactor, element)]
    for coeff, child in children:
        child_nd, child_cert = _rewrite_monomial(complex, child)
        nd = nd + child_nd * coeff
        for c2, cof2, el2 in child_cert:
            cert.append((coeff * c2, cof2, el2))
    result = (nd, tuple(cert))
    cache[m] = result
    return result


def rewrite_to_nd(complex, p, k=None):
    """Rewrite a homogeneous polynomial onto nondegenerate simplex
    monomials.  Returns (nd_part, certificate); the certificate entries
    (coeff, cofactor, element) satisfy exactly, as polynomials,

        p - nd_part = sum coeff * C_cofactor * element.poly
    """
    if not p:
        return Poly(), []
    degree = p.degree()
    if not p.is_homogeneous(degree):
        raise GraphInputError("rewriting needs a homogeneous polynomial")
    if k is not None and degree != k + 1:
        raise GraphInputError("degree %d does not match k+1 = %d" % (degree, k + 1))
    for v in p.support_vertices():
        complex.check_vertex(v)
    nd = Poly()
    cert = {}
    for m, c in sorted(p.terms.items()):
        m_nd, m_cert = _rewrite_monomial(complex, m)
        nd = nd + m_nd * c
        for c2, cof, el in m_cert:
            key = (cof, el.key())
            prev = cert.get(key)
            if prev is None:
                cert[key] = [c * c2, cof, el]
            else:
                prev[0] += c * c2
    certificate = [(c, cof, el) for c, cof, el in cert.values() if c]
    return nd, certificate


def certificate_poly(certificate):
    """Expand a rewriting certificate to the ideal element it encodes."""
    out = Poly()
    for coeff, cofactor, element in certificate:
        out = out + element.poly * Poly.monomial(cofactor) * coeff
    return out


# ---- presentation on the nondegenerate basis ----


class Presentation:
    """Graded piece as ZZ^basis modulo a row lattice of insertion relations."""

    def __init__(self, complex, k, basis, lattice):
        self.complex = complex
        self.k = k
        self.basis = basis
        self.index = {m: i for i, m in enumerate(basis)}
        self.lattice = lattice

    @property
    def free_rank(self):
        return len(self.basis) - self.lattice.rank

    def invariant_factors(self):
        """Nonzero invariant factors of the relation lattice."""
        rows = self.lattice.basis()
        if not rows:
            return []
        return invariant_factors(rows, len(self.basis))

    def torsion(self):
        return [d for d in self.invariant_factors() if d != 1]

    def vector(self, p):
        coeffs = [0] * len(self.basis)
        for m, c in p.terms.items():
            coeffs[self.index[m]] = c
        return coeffs

    def reduce(self, p):
        """Canonical coordinates of an nd-supported polynomial."""
        return tuple(self.lattice.reduce_vector(self.vector(p)))


def nd_presentation(complex, k):
    """Presentation of the graded piece in degree k+1 on the basis of
    nondegenerate k-simplices."""
    key = ("ndpres", k)
    if key in complex._cache:
        return complex._cache[key]
    chains = complex.enumerate_simplices(k)
    basis = tuple(tuple(sorted(ch)) for ch in chains)
    lattice = RowLattice(len(basis))
    if k >= 1:
        index = {m: i for i, m in enumerate(basis)}
        for element in relation_generators(complex, "Rtilde", k + 1):
            row = [0] * len(basis)
            for m, c in element.poly.terms.items():
                row[index[m]] = c
            lattice.insert(row)
    pres = Presentation(complex, k, basis, lattice)
    complex._cache[key] = pres
    return pres


class ChowClass:
    """Canonical representative of a graded ring element.

    coords is the Hermite-reduced coordinate vector over the deterministic
    nondegenerate basis of the presentation.
    """

    __slots__ = ("presentation", "coords")

    def __init__(self, presentation, coords):
        self.presentation = presentation
        self.coords = tuple(coords)

    @property
    def k(self):
        return self.presentation.k

    def key(self):
        return (self.presentation.complex.signature(), self.presentation.k, self.coords)

    def __eq__(self, other):
        return isinstance(other, ChowClass) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    @property
    def is_zero(self):
        return not any(self.coords)

    def to_poly(self):
        out = Poly()
        for c, m in zip(self.coords, self.presentation.basis):
            if c:
                out = out + Poly.monomial(m, c)
        return out

    def __add__(self, other):
        assert self.presentation is other.presentation
        merged = [a + b for a, b in zip(self.coords, other.coords)]
        return ChowClass(self.presentation, self.presentation.lattice.reduce_vector(merged))

    def __sub__(self, other):
        assert self.presentation is other.presentation
        merged = [a - b for a, b in zip(self.coords, other.coords)]
        return ChowClass(self.presentation, self.presentation.lattice.reduce_vector(merged))

    def __mul__(self, c):
        return ChowClass(
            self.presentation,
            self.presentation.lattice.reduce_vector([c * x for x in self.coords]),
        )

    def __repr__(self):
        return "ChowClass(k=%d, %r)" % (self.k, self.coords)


def chow_class(complex, p, k=None):
    """Canonical class of a homogeneous polynomial."""
    if not p:
        if k is None:
            raise GraphInputError("zero polynomial needs an explicit grading")
        return ChowClass(nd_presentation(complex, k), (0,) * len(nd_presentation(complex, k).basis))
    degree = p.degree()
    if not p.is_homogeneous(degree):
        raise GraphInputError("classes are graded; polynomial is not homogeneous")
    if degree == 0:
        raise GraphInputError("degree 0 has no nondegenerate presentation; constants are free")
    if k is not None and degree != k + 1:
        raise GraphInputError("degree %d does not match k+1 = %d" % (degree, k + 1))
    k = degree - 1
    nd, _ = rewrite_to_nd(complex, p)
    pres = nd_presentation(complex, k)
    return ChowClass(pres, pres.reduce(nd))


def is_rationally_zero(complex, p):
    """True when every graded part of p lies in the relation ideal."""
    for degree in sorted({len(m) for m in p.terms}):
        part = p.graded_part(degree)
        if degree == 0:
            return False
        if degree > complex.d + 1:
            nd, _ = rewrite_to_nd(complex, part)
            if nd:
                raise AssertionError("nondegenerate remainder above top degree")
            continue
        if not chow_class(complex, part).is_zero:
            return False
    return True
