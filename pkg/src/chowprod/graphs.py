"""Finite simple connected graphs with a total vertex order.

A graph is a factor of a product complex.  The vertex list fixes the total
order used everywhere: the coordinatewise partial order on products, edge
orientation (edges point from the smaller vertex to the larger one), and the
deterministic total order on the edge set (lexicographic on the ordered
endpoint positions).
"""

from .errors import GraphInputError


class OrderedGraph:
    """Immutable ordered graph.

    vertices: tuple of labels, list position = order rank
    edges: tuple of (a, b) label pairs with pos(a) < pos(b), sorted by
           (pos(a), pos(b))
    """

    __slots__ = ("vertices", "edges", "_pos", "_adj", "_up")

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        pos = self._pos
        normalized = []
        for a, b in edges:
            if pos[a] > pos[b]:
                a, b = b, a
            normalized.append((a, b))
        normalized.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        self.edges = tuple(normalized)
        self._adj = {v: set() for v in self.vertices}
        self._up = {v: [] for v in self.vertices}
        for a, b in self.edges:
            self._adj[a].add(b)
            self._adj[b].add(a)
            self._up[a].append(b)
        for v in self.vertices:
            self._up[v].sort(key=pos.__getitem__)

    def pos(self, v):
        return self._pos[v]

    def has_vertex(self, v):
        return v in self._pos

    def has_edge(self, a, b):
        return b in self._adj.get(a, ())

    def up_neighbors(self, v):
        """Neighbors above v in the vertex order, ascending."""
        return self._up[v]

    def neighbors(self, v):
        return sorted(self._adj[v], key=self._pos.__getitem__)

    def valence(self, v):
        return len(self._adj[v])

    def edge_index(self, a, b):
        if self._pos[a] > self._pos[b]:
            a, b = b, a
        return self.edges.index((a, b))

    @property
    def n(self):
        return len(self.vertices)

    def signature(self):
        """Hashable identity used for caching derived structures."""
        return (self.vertices, self.edges)

    def __eq__(self, other):
        return isinstance(other, OrderedGraph) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return "OrderedGraph(%r, %r)" % (list(self.vertices), [list(e) for e in self.edges])


def build_graph(vertex_order, edges):
    """Validate and build an OrderedGraph.

    Rejects empty vertex lists, duplicate vertices, loops, duplicate or
    dangling edges, and disconnected graphs.  A single vertex with no edges
    is connected and accepted.
    """
    vertices = list(vertex_order)
    if not vertices:
        raise GraphInputError("vertex list is empty")
    if len(set(vertices)) != len(vertices):
        raise GraphInputError("duplicate vertex labels: %r" % (vertices,))
    vset = set(vertices)
    seen = set()
    for e in edges:
        try:
            a, b = e
        except (TypeError, ValueError):
            raise GraphInputError("edge %r is not a pair" % (e,))
        if a == b:
            raise GraphInputError("loop at vertex %r" % (a,))
        if a not in vset or b not in vset:
            raise GraphInputError("edge %r has an undeclared endpoint" % (e,))
        key = frozenset((a, b))
        if key in seen:
            raise GraphInputError("duplicate edge %r" % (e,))
        seen.add(key)
    graph = OrderedGraph(vertices, [tuple(e) for e in edges])
    _check_connected(graph)
    return graph


def _check_connected(graph):
    stack = [graph.vertices[0]]
    reached = {graph.vertices[0]}
    while stack:
        v = stack.pop()
        for w in graph._adj[v]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != graph.n:
        missing = sorted(set(graph.vertices) - reached, key=graph.pos)
        raise GraphInputError("graph is disconnected, e.g. vertex %r unreachable" % (missing[0],))


def complete_graph(n):
    verts = list(range(n))
    return build_graph(verts, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n):
    """Path on n vertices 0 - 1 - ... - (n-1)."""
    return build_graph(list(range(n)), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    assert n >= 3
    return build_graph(list(range(n)), [(i, (i + 1) % n) for i in range(n)])


def subdivide(graph, n):
    """Replace each edge by a path of n edges.

    The n-1 midpoints of an edge (a, b) sit between a and b in the new
    order: each original vertex is followed by the midpoint chains of the
    edges it starts (in edge order), midpoints along one edge ascending from
    the a side.  Vertices are relabeled 0..N-1 in the new order.  n=1 copies
    the graph up to relabeling.
    """
    assert n >= 1
    order = []
    midpoints = {}
    for v in graph.vertices:
        order.append(("v", v))
        for w in graph.up_neighbors(v):
            chain = [("m", v, w, t) for t in range(1, n)]
            midpoints[(v, w)] = chain
            order.extend(chain)
    label = {node: i for i, node in enumerate(order)}
    edges = []
    for a, b in graph.edges:
        path = [("v", a)] + midpoints[(a, b)] + [("v", b)]
        for x, y in zip(path, path[1:]):
            edges.append((label[x], label[y]))
    return build_graph(list(range(len(order))), edges)


def line_graph(graph):
    """Graph on the edges of the input, ordered by the fixed edge order;
    two edges are adjacent when they share an endpoint."""
    m = len(graph.edges)
    pairs = []
    for i in range(m):
        for j in range(i + 1, m):
            if set(graph.edges[i]) & set(graph.edges[j]):
                pairs.append((i, j))
    return build_graph(list(range(m)), pairs)
