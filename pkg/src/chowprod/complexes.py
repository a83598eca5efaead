"""Products of ordered graphs and their simplicial structure.

Vertices of a product are d-tuples of factor vertices, ordered
coordinatewise.  A multiset of vertices is a simplex when it sorts into a
weak chain whose consecutive steps move each coordinate along at most one
factor edge, no coordinate moving in more than one step.  Maximal cells are
the cubes e_1 x ... x e_d, one per d-tuple of factor edges.
"""

from itertools import product as iproduct

from .errors import GraphInputError
from .graphs import build_graph, complete_graph


class ProductComplex:

    __slots__ = ("factors", "_sig", "_cache")

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise GraphInputError("product needs at least one factor")
        self.factors = factors
        self._sig = tuple(g.signature() for g in factors)
        self._cache = {}

    @property
    def d(self):
        return len(self.factors)

    def signature(self):
        return self._sig

    def __eq__(self, other):
        return isinstance(other, ProductComplex) and self._sig == other._sig

    def __hash__(self):
        return hash(self._sig)

    def __repr__(self):
        return "ProductComplex(d=%d, factors=%r)" % (self.d, [g.n for g in self.factors])

    # ---- vertices and the partial order ----

    def vertices(self):
        """All product vertices, lexicographic in factor order positions."""
        if "vertices" not in self._cache:
            self._cache["vertices"] = tuple(iproduct(*(g.vertices for g in self.factors)))
        return self._cache["vertices"]

    def has_vertex(self, v):
        return (
            isinstance(v, tuple)
            and len(v) == self.d
            and all(g.has_vertex(c) for g, c in zip(self.factors, v))
        )

    def check_vertex(self, v):
        if not self.has_vertex(v):
            raise GraphInputError("vertex %r is not in the product" % (v,))

    def pos_tuple(self, v):
        return tuple(g.pos(c) for g, c in zip(self.factors, v))

    def leq(self, u, v):
        return all(g.pos(a) <= g.pos(b) for g, a, b in zip(self.factors, u, v))

    def step_moves(self, u, v):
        """Coordinates strictly moving from u to v (0-based), or None if
        {u, v} with u <= v is not a 1-simplex."""
        moves = []
        for i, (g, a, b) in enumerate(zip(self.factors, u, v)):
            if a == b:
                continue
            if g.pos(a) < g.pos(b) and g.has_edge(a, b):
                moves.append(i)
            else:
                return None
        return tuple(moves)

    def is_one_simplex(self, u, v):
        return self.step_moves(u, v) is not None or self.step_moves(v, u) is not None

    def interval_set(self, u, v):
        """Set of 1-based coordinates where u < v, for a 1-simplex u <= v."""
        moves = self.step_moves(u, v)
        if moves is None:
            raise GraphInputError("{%r, %r} is not an ordered 1-simplex" % (u, v))
        return frozenset(i + 1 for i in moves)

    # ---- simplices ----

    def chain_support(self, vertices):
        """Sort a vertex multiset into a simplex chain.

        Returns (support, multiplicities) with support strictly increasing,
        or None when the multiset is not a simplex.  Any linear extension of
        the product order sorts a chain correctly; position-sum then
        position-lex is one.
        """
        if not vertices:
            return (), ()
        keyed = sorted(vertices, key=lambda v: (sum(self.pos_tuple(v)), self.pos_tuple(v)))
        support = [keyed[0]]
        mult = [1]
        for v in keyed[1:]:
            if v == support[-1]:
                mult[-1] += 1
            else:
                support.append(v)
                mult.append(1)
        used = set()
        for u, w in zip(support, support[1:]):
            moves = self.step_moves(u, w)
            if not moves:
                return None
            if used.intersection(moves):
                return None
            used.update(moves)
        return tuple(support), tuple(mult)

    def is_simplex(self, vertices):
        vertices = tuple(vertices)
        if not all(self.has_vertex(v) for v in vertices):
            return False
        return self.chain_support(vertices) is not None

    def enumerate_simplices(self, k, nondegenerate=True):
        """All k-simplices (chains of k+1 vertices), deterministic order.

        Nondegenerate chains are strictly increasing; the degenerate listing
        repeats support vertices with multiplicity.
        """
        assert k >= 0
        key = ("nd", k)
        if key not in self._cache:
            out = []
            for v in self.vertices():
                self._extend_chain([v], frozenset(), k, out)
            self._cache[key] = tuple(out)
        if nondegenerate:
            return self._cache[key]
        key2 = ("weak", k)
        if key2 not in self._cache:
            out = []
            for size in range(1, k + 2):
                for support in self.enumerate_simplices(size - 1):
                    for mult in _compositions(k + 1, size):
                        chain = []
                        for v, m in zip(support, mult):
                            chain.extend([v] * m)
                        out.append(tuple(chain))
            out.sort(key=lambda ch: tuple(self.pos_tuple(v) for v in ch))
            self._cache[key2] = tuple(out)
        return self._cache[key2]

    def _extend_chain(self, chain, used, k, out):
        if len(chain) == k + 1:
            out.append(tuple(chain))
            return
        v = chain[-1]
        free = [i for i in range(self.d) if i not in used]
        options = []
        for i in range(self.d):
            g = self.factors[i]
            options.append([v[i]] + (g.up_neighbors(v[i]) if i not in used else []))
        for w in iproduct(*options):
            if w == v:
                continue
            moved = frozenset(i for i in free if w[i] != v[i])
            self._extend_chain(chain + [w], used | moved, k, out)

    def successors(self, v, used):
        """Strict 1-simplex steps from v moving only coordinates outside
        used; ascending."""
        options = []
        for i in range(self.d):
            g = self.factors[i]
            options.append([v[i]] + (g.up_neighbors(v[i]) if i not in used else []))
        return [w for w in iproduct(*options) if w != v]

    # ---- cubes ----

    def cubes(self):
        """All d-tuples of factor edges, lexicographic in factor edge order."""
        if "cubes" not in self._cache:
            self._cache["cubes"] = tuple(iproduct(*(g.edges for g in self.factors)))
        return self._cache["cubes"]

    def cube_vertices(self, cube):
        return tuple(iproduct(*cube))

    def cube_contains(self, cube, v):
        return all(c in e for c, e in zip(v, cube))

    def cube_bits(self, cube, v):
        """Identify a cube vertex with a 0/1 word, edge source -> 0."""
        return tuple(0 if c == e[0] else 1 for c, e in zip(v, cube))

    def cube_vertex(self, cube, bits):
        return tuple(e[b] for e, b in zip(cube, bits))

    def cube_complex(self, cube):
        key = ("sub", tuple(tuple(e) for e in cube))
        if key not in self._cache:
            self._cache[key] = sub_complex(self, [list(e) for e in cube])
        return self._cache[key]

    def cube_intersection(self, c1, c2):
        """Per-factor common vertex lists of two cubes, or None when empty."""
        sets = []
        for g, e1, e2 in zip(self.factors, c1, c2):
            common = [v for v in e1 if v in e2]
            if not common:
                return None
            sets.append(common)
        return sets

    def cube_adjacencies(self):
        """For each coordinate i, ordered pairs of cubes equal away from i
        whose i-th edges share a vertex, with the shared facet."""
        if "adjacencies" in self._cache:
            return self._cache["adjacencies"]
        out = []
        for i in range(self.d):
            g = self.factors[i]
            incident = []
            for a in range(len(g.edges)):
                for b in range(a + 1, len(g.edges)):
                    shared = set(g.edges[a]) & set(g.edges[b])
                    if shared:
                        incident.append((a, b, min(shared, key=g.pos)))
            rest = [gg.edges for j, gg in enumerate(self.factors) if j != i]
            for others in iproduct(*rest):
                for a, b, shared in incident:
                    c1 = others[:i] + (g.edges[a],) + others[i:]
                    c2 = others[:i] + (g.edges[b],) + others[i:]
                    facet = [list(e) for e in others[:i]] + [[shared]] + [list(e) for e in others[i:]]
                    out.append((i, c1, c2, facet))
        self._cache["adjacencies"] = tuple(out)
        return self._cache["adjacencies"]


def product(factors):
    """Build the product complex of ordered graphs."""
    return ProductComplex(factors)


def sub_complex(complex, vertex_lists):
    """Induced subproduct on per-factor vertex subsets (same labels, order
    inherited).  Each induced factor must be connected; single vertices are
    fine."""
    assert len(vertex_lists) == complex.d
    factors = []
    for g, keep in zip(complex.factors, vertex_lists):
        keep_sorted = sorted(set(keep), key=g.pos)
        edges = [(a, b) for a, b in g.edges if a in set(keep_sorted) and b in set(keep_sorted)]
        factors.append(build_graph(keep_sorted, edges))
    return ProductComplex(factors)


_hypercubes = {}


def hypercube(d):
    """Product of d single edges; vertices are 0/1 words.  Instances are
    shared so cached rewrites and presentations are reused."""
    if d not in _hypercubes:
        _hypercubes[d] = ProductComplex([complete_graph(2)] * d)
    return _hypercubes[d]


def _compositions(total, parts):
    """Ordered positive integer compositions, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
