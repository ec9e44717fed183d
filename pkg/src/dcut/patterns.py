"""Named small patterns H and induced-copy search.

Pattern names are sums of components, e.g. ``"P5"``, ``"3P2"``, ``"P3+P4"``,
``"K1,3"`` (the claw), ``"C5"``, ``"P5+2P1"``.  Every pattern has at most 7
vertices; the search is plain backtracking over ordered vertex tuples.
"""
import re
from functools import lru_cache

from .graph import Graph, disjoint_union

MAX_PATTERN_VERTICES = 7

ALIASES = {"claw": "K1,3"}

RECOGNIZED = ("P5", "P6", "P7", "P3+P4", "K1,3", "3P2", "C3", "C4", "C5", "C6", "C7")

_TERM = re.compile(r"^(\d*)(P|C|K1,|K)(\d+)$")


def _component(kind, k):
    if kind == "P":
        return Graph.path(k)
    if kind == "C":
        return Graph.cycle(k)
    if kind == "K1,":
        return Graph.star(k)
    return Graph.complete(k)


@lru_cache(maxsize=None)
def pattern_graph(name):
    """The fixed graph named by ``name``."""
    key = ALIASES.get(name, name).replace(" ", "")
    parts = []
    for term in key.split("+"):
        match = _TERM.match(term)
        if not match:
            raise ValueError(f"unrecognized pattern term {term!r} in {name!r}")
        mult = int(match.group(1) or 1)
        parts.extend([_component(match.group(2), int(match.group(3)))] * mult)
    h = disjoint_union(*parts)
    if h.n > MAX_PATTERN_VERTICES:
        raise ValueError(f"pattern {name!r} has {h.n} > {MAX_PATTERN_VERTICES} vertices")
    return h


def plus_p1(name, s=1):
    """Name of H + sP1."""
    return f"{name}+{s}P1" if s > 1 else f"{name}+P1"


def _search_order(h):
    # Vertices of each component in BFS order so every new pattern vertex has
    # an already-placed neighbour whenever possible.
    order = []
    placed = set()
    for start in sorted(range(h.n), key=lambda v: -h.degree(v)):
        if start in placed:
            continue
        queue = [start]
        placed.add(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in h.adj[v]:
                if u not in placed:
                    placed.add(u)
                    queue.append(u)
    return order


def find_induced(g, h, within=None):
    """Return a tuple ``t`` with ``t[i]`` the image of pattern vertex ``i``, or None.

    ``h`` is a pattern name or a :class:`Graph`.  ``within`` optionally
    restricts the search to the subgraph induced by a vertex bitmask.
    """
    if isinstance(h, str):
        h = pattern_graph(h)
    if h.n == 0:
        return ()
    allowed = g.full_mask if within is None else within
    if h.n > allowed.bit_count():
        return None
    order = _search_order(h)
    hdeg = [h.degree(v) for v in range(h.n)]
    candidates = [v for v in range(g.n) if allowed >> v & 1]
    gdeg = {v: (g.bits[v] & allowed).bit_count() for v in candidates}
    image = [None] * h.n
    used = 0

    def extend(k):
        nonlocal used
        if k == h.n:
            return True
        p = order[k]
        placed = order[:k]
        need_adj = 0
        need_non = 0
        for q in placed:
            if h.has_edge(p, q):
                need_adj |= 1 << image[q]
            else:
                need_non |= 1 << image[q]
        if need_adj:
            # must be a common neighbour of the adjacent images
            pool = allowed
            for v in _bits(need_adj):
                pool &= g.bits[v]
        else:
            pool = allowed
        pool &= ~used
        for v in _bits(pool):
            if gdeg[v] < hdeg[p] or g.bits[v] & need_non:
                continue
            image[p] = v
            used |= 1 << v
            if extend(k + 1):
                return True
            used &= ~(1 << v)
        image[p] = None
        return False

    if extend(0):
        return tuple(image)
    return None


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_free(g, h, within=None):
    return find_induced(g, h, within) is None


def iter_induced(g, h):
    """Yield every distinct vertex set inducing a copy of ``h`` (as sorted tuples)."""
    if isinstance(h, str):
        h = pattern_graph(h)
    order = _search_order(h)
    seen = set()
    image = [None] * h.n

    def extend(k, used):
        if k == h.n:
            key = tuple(sorted(image))
            if key not in seen:
                seen.add(key)
                yield key
            return
        p = order[k]
        pool = g.full_mask & ~used
        for q in order[:k]:
            if h.has_edge(p, q):
                pool &= g.bits[image[q]]
            else:
                pool &= ~g.bits[image[q]]
        for v in _bits(pool):
            image[p] = v
            yield from extend(k + 1, used | (1 << v))
        image[p] = None

    yield from extend(0, 0)
