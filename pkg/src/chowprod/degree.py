"""Degree maps.

On the d-cube the degree of a top-dimensional chain monomial
C_{v_1}^{n_1} ... C_{v_k}^{n_k} is a signed product of binomials read off
the gap statistics x_i, y_i of the chain; the global degree on a product
complex sums the cube restrictions.  Pairings of rational vertex functions
expand multilinearly and stay exact.
"""

from math import comb

from .complexes import hypercube
from .errors import GraphInputError
from .poly import Poly
from .ring import reduce_mod_I1


class ChainMonomial:
    """Strictly increasing chain of 0/1 words with exponents summing to
    d+1; the shape of a top-degree simplex monomial on the d-cube."""

    __slots__ = ("d", "chain", "exponents")

    def __init__(self, d, chain, exponents):
        chain = tuple(tuple(v) for v in chain)
        exponents = tuple(int(n) for n in exponents)
        if len(chain) != len(exponents) or not chain:
            raise GraphInputError("chain and exponent lists must match and be nonempty")
        if any(n < 1 for n in exponents):
            raise GraphInputError("exponents must be positive")
        if sum(exponents) != d + 1:
            raise GraphInputError(
                "exponents sum to %d, top degree needs %d" % (sum(exponents), d + 1)
            )
        H = hypercube(d)
        expanded = []
        for v, n in zip(chain, exponents):
            if not H.has_vertex(v):
                raise GraphInputError("%r is not a vertex of the %d-cube" % (v, d))
            expanded.extend([v] * n)
        sup = H.chain_support(expanded)
        if sup is None or sup[0] != chain:
            raise GraphInputError("vertices do not form a strictly increasing chain")
        self.d = d
        self.chain = chain
        self.exponents = exponents

    @classmethod
    def from_monomial(cls, d, m):
        """Shape of a degree-(d+1) monomial on 0/1 words, or None when the
        support is not a simplex."""
        if len(m) != d + 1:
            raise GraphInputError("monomial degree %d, need %d" % (len(m), d + 1))
        sup = hypercube(d).chain_support(m)
        if sup is None:
            return None
        return cls(d, sup[0], sup[1])

    def lengths(self):
        return tuple(sum(v) for v in self.chain)

    def __repr__(self):
        return "ChainMonomial(d=%d, %r, %r)" % (self.d, self.chain, self.exponents)


def vanishes_by_criterion(cm):
    """Direct check of the two inequality families: a prefix of exponents
    overshooting the next vertex length, or a suffix overshooting the
    remaining codimension."""
    lengths = cm.lengths()
    n = cm.exponents
    k = len(n)
    prefix = 0
    for i in range(k - 1):
        prefix += n[i]
        if prefix > lengths[i + 1]:
            return True
    suffix = 0
    for i in range(k - 1, 0, -1):
        suffix += n[i]
        if suffix > cm.d - lengths[i - 1]:
            return True
    return False


def xy_sequence(cm):
    """Gap statistics (y_0, x_1, y_1, ..., x_k) of the chain, or None when
    some entry is negative (equivalently, the vanishing criterion fires):

        y_0 = |v_1|,  x_i = n_1+..+n_i - |v_i| - 1,
        y_i = |v_{i+1}| - (n_1+..+n_i).
    """
    lengths = cm.lengths()
    n = cm.exponents
    k = len(n)
    seq = [lengths[0]]
    prefix = 0
    for i in range(1, k + 1):
        prefix += n[i - 1]
        x = prefix - lengths[i - 1] - 1
        seq.append(x)
        if i < k:
            seq.append(lengths[i] - prefix)
    if any(s < 0 for s in seq):
        return None
    return tuple(seq)


def hypercube_degree(cm):
    """Signed binomial product over consecutive pairs of the gap sequence;
    0 when the chain cannot carry a top class."""
    seq = xy_sequence(cm)
    if seq is None:
        return 0
    k = len(cm.exponents)
    out = 1
    for a, b in zip(seq, seq[1:]):
        out *= comb(a + b, a)
    if (cm.d + 1 - k) % 2:
        out = -out
    return out


def monomial_degree(d, m):
    """Degree of an arbitrary degree-(d+1) monomial on 0/1 words."""
    cm = ChainMonomial.from_monomial(d, m)
    if cm is None:
        return 0
    return hypercube_degree(cm)


def total_degree(complex, x):
    """Degree of a top graded class or polynomial: sum over cubes of the
    formula applied to the restriction, each cube read as a d-cube through
    its per-factor edge orientations."""
    from .ring import ChowClass

    d = complex.d
    if isinstance(x, ChowClass):
        if x.presentation.complex.signature() != complex.signature():
            raise GraphInputError("class lives on a different product")
        if x.k != d:
            raise GraphInputError("degree is defined in graded degree %d" % (d + 1,))
        p = x.to_poly()
    else:
        p = x
        if p and not p.is_homogeneous(d + 1):
            raise GraphInputError("degree is defined in graded degree %d" % (d + 1,))
        for v in p.support_vertices():
            complex.check_vertex(v)
    if not p:
        return 0
    total = 0
    for cube in complex.cubes():
        allowed = set(complex.cube_vertices(cube))
        for m, c in p.terms.items():
            if all(v in allowed for v in m):
                bits = tuple(sorted(complex.cube_bits(cube, v) for v in m))
                deg = monomial_degree(d, bits)
                if deg:
                    total += c * deg
    return total


def pairing(complex, fs):
    """Multilinear degree pairing of d+1 vertex functions given as maps
    vertex -> rational; missing vertices count as 0."""
    d = complex.d
    fs = list(fs)
    if len(fs) != d + 1:
        raise GraphInputError("pairing needs %d functions, got %d" % (d + 1, len(fs)))
    verts = set(complex.vertices())
    prod = Poly.constant(1)
    for f in fs:
        for v in f:
            if v not in verts:
                raise GraphInputError("function value on unknown vertex %r" % (v,))
        form = Poly({(v,): c for v, c in f.items() if c})
        prod = reduce_mod_I1(complex, prod * form)
        if not prod:
            return 0
    return total_degree(complex, prod)


def dirichlet_pairing_d1(graph, f, g):
    """Exact Dirichlet energy pairing on a graph with unit edge lengths:
    minus the sum over edges of the product of slopes."""
    for h in (f, g):
        for v in h:
            if not graph.has_vertex(v):
                raise GraphInputError("function value on unknown vertex %r" % (v,))
    total = 0
    for a, b in graph.edges:
        total += (f.get(b, 0) - f.get(a, 0)) * (g.get(b, 0) - g.get(a, 0))
    return -total
