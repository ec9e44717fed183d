"""Immutable simple graphs on vertices ``0..n-1``.

Adjacency is stored twice: as Python-int bitsets (``bits[v]`` has bit ``u`` set
iff ``uv`` is an edge) for the branching code, which intersects neighbourhoods
constantly, and as sorted tuples for everything else.
"""
from collections import deque
from itertools import combinations

import numpy as np

from .exceptions import PreconditionError

INF = float("inf")


def iter_bits(mask):
    """Yield the indices of set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph; immutable after construction."""

    __slots__ = ("n", "bits", "_adj", "_hash")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        bits = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.n = n
        self.bits = tuple(bits)
        self._adj = None
        self._hash = None

    @classmethod
    def from_bits(cls, bits):
        g = cls.__new__(cls)
        g.n = len(bits)
        g.bits = tuple(bits)
        g._adj = None
        g._hash = None
        for v, b in enumerate(g.bits):
            if b >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if b >> g.n:
                raise ValueError(f"neighbour of {v} out of range")
            for u in iter_bits(b):
                if not g.bits[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return g

    @classmethod
    def complete(cls, n):
        return cls(n, combinations(range(n), 2))

    @classmethod
    def path(cls, n):
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n):
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, leaves):
        return cls(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @property
    def adj(self):
        if self._adj is None:
            self._adj = tuple(tuple(iter_bits(b)) for b in self.bits)
        return self._adj

    @property
    def m(self):
        return sum(b.bit_count() for b in self.bits) // 2

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def neighbours(self, v):
        return self.adj[v]

    def degree(self, v):
        return self.bits[v].bit_count()

    def has_edge(self, u, v):
        return bool(self.bits[u] >> v & 1)

    def edges(self):
        """Edges as ``(u, v)`` pairs with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def closed_mask(self, v):
        return self.bits[v] | (1 << v)

    def neighbourhood_mask(self, mask):
        """Open neighbourhood N(S) of the vertex set encoded by ``mask``."""
        out = 0
        for v in iter_bits(mask):
            out |= self.bits[v]
        return out & ~mask

    def __eq__(self, other):
        return isinstance(other, Graph) and self.bits == other.bits

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.bits)
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def bfs_distances(g, source, within=None):
    """Hop distances from ``source``; ``within`` restricts to an induced subgraph mask."""
    allowed = g.full_mask if within is None else within
    dist = {source: 0}
    frontier = 1 << source
    seen = frontier
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.bits[v]
        nxt &= allowed & ~seen
        for v in iter_bits(nxt):
            dist[v] = level
        seen |= nxt
        frontier = nxt
    return dist


def distances(g):
    """All-pairs BFS distance matrix, ``inf`` between components."""
    out = np.full((g.n, g.n), INF)
    for s in range(g.n):
        for v, k in bfs_distances(g, s).items():
            out[s, v] = k
    return out


def eccentricity(g, v, within=None):
    allowed = g.full_mask if within is None else within
    dist = bfs_distances(g, v, allowed)
    if len(dist) < allowed.bit_count():
        return INF
    return max(dist.values())


def _eccentricities(g, within=None):
    allowed = g.full_mask if within is None else within
    return {v: eccentricity(g, v, allowed) for v in iter_bits(allowed)}


def diameter(g, within=None):
    ecc = _eccentricities(g, within)
    return max(ecc.values()) if ecc else 0


def radius(g, within=None):
    ecc = _eccentricities(g, within)
    return min(ecc.values()) if ecc else 0


def component_masks(g, within=None):
    """Connected components of G[within] as bitmasks, ordered by smallest vertex."""
    remaining = g.full_mask if within is None else within
    out = []
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.bits[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        remaining &= ~comp
    return out


def connected_components(g):
    return [sorted(iter_bits(c)) for c in component_masks(g)]


def is_connected(g, within=None):
    allowed = g.full_mask if within is None else within
    return allowed == 0 or len(component_masks(g, allowed)) == 1


def require_connected(g):
    comps = connected_components(g)
    if g.n == 0 or len(comps) > 1:
        raise PreconditionError(f"graph is not connected ({len(comps)} components)", evidence=comps)


def induced_subgraph(g, vertices):
    """G[S] relabelled to ``0..|S|-1`` in increasing original order.

    Returns ``(subgraph, index_map)`` where ``index_map[i]`` is the original
    vertex of new vertex ``i``.
    """
    index_map = sorted(set(vertices))
    for v in index_map:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(index_map)}
    edges = [(pos[u], pos[v]) for u in index_map for v in g.adj[u] if u < v and v in pos]
    return Graph(len(index_map), edges), index_map


def line_graph(g):
    """L(G) with vertices for edges of G in lexicographic order.

    Returns ``(L, edge_list)`` where ``edge_list[i]`` is the edge of ``g``
    represented by vertex ``i`` of ``L``.
    """
    edge_list = g.edges()
    incident = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edge_list):
        incident[u].append(i)
        incident[v].append(i)
    ledges = set()
    for inc in incident:
        for a, b in combinations(inc, 2):
            ledges.add((a, b))
    return Graph(len(edge_list), sorted(ledges)), edge_list


def complement(g):
    full = g.full_mask
    return Graph.from_bits([full & ~b & ~(1 << v) for v, b in enumerate(g.bits)])


def disjoint_union(*graphs):
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph(offset, edges)
