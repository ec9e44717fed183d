"""Seeded random members of the graph classes the solvers handle.

Every generator draws candidates from one or more simple random models and
keeps those the recognizers accept, so class membership never rests on the
model being right.  Output is a deterministic function of the seed.
"""
import random
from dataclasses import dataclass, field
from itertools import combinations

from .exceptions import DCutError
from .graph import Graph, diameter, is_connected
from .patterns import is_free

CLASSES = ("connected", "diam2", "p5free", "p3p4free")
DEFAULT_P_RANGE = (0.2, 0.8)


class GenerationError(DCutError):
    """The rejection budget ran out before enough members were found."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


@dataclass
class GenerationReport:
    graph_class: str
    n: int
    seed: int
    accepted: int = 0
    attempts: int = 0
    by_model: dict = field(default_factory=dict)

    @property
    def acceptance_rate(self):
        return self.accepted / self.attempts if self.attempts else 0.0

    def to_json(self):
        return {
            "class": self.graph_class,
            "n": self.n,
            "seed": self.seed,
            "accepted": self.accepted,
            "attempts": self.attempts,
            "acceptance_rate": round(self.acceptance_rate, 4),
            "by_model": self.by_model,
        }


def in_class(g, graph_class):
    if graph_class not in CLASSES:
        raise ValueError(f"unknown class {graph_class!r}; choose from {', '.join(CLASSES)}")
    if not is_connected(g) or g.n == 0:
        return False
    if graph_class == "diam2":
        return diameter(g) <= 2
    if graph_class == "p5free":
        return is_free(g, "P5")
    if graph_class == "p3p4free":
        return is_free(g, "P3+P4")
    return True


# ---------------------------------------------------------------------------
# random models


def gnp(rng, n, p):
    return Graph(n, (e for e in combinations(range(n), 2) if rng.random() < p))


def _partition(rng, n, parts):
    cuts = sorted(rng.sample(range(1, n), parts - 1)) if parts > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    return sizes


def blow_up(rng, n, p):
    """Random skeleton whose vertices are replaced by cliques.

    Skeleton edges become complete joins or, half the time, a sparse random
    matching between the two cliques.
    """
    parts = rng.randint(1, min(n, 6))
    sizes = _partition(rng, n, parts)
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    edges = set()
    for b in blocks:
        edges.update(combinations(b, 2))
    for i, j in combinations(range(parts), 2):
        if rng.random() >= p:
            continue
        if rng.random() < 0.5:
            edges.update((u, v) for u in blocks[i] for v in blocks[j])
        else:
            for u in blocks[i]:
                if rng.random() < 0.7:
                    edges.add((u, rng.choice(blocks[j])))
    return Graph(n, edges)


def cograph(rng, n, p):
    """Random cograph: repeatedly join or disjoint-union two random pieces."""
    pieces = [[v] for v in range(n)]
    edges = []
    while len(pieces) > 1:
        i, j = sorted(rng.sample(range(len(pieces)), 2))
        a, b = pieces[i], pieces.pop(j)
        if rng.random() < p:
            edges.extend((u, v) for u in a for v in b)
        a.extend(b)
    return Graph(n, edges)


def pendant_cliques(rng, n, p):
    """An induced P4 followed by cliques whose vertices attach to earlier ones."""
    if n < 4:
        return gnp(rng, n, p)
    edges = {(0, 1), (1, 2), (2, 3)}
    nxt = 4
    while nxt < n:
        block = range(nxt, min(n, nxt + rng.randint(1, 5)))
        nxt = block[-1] + 1
        edges.update(combinations(block, 2))
        for u in block:
            edges.update((w, u) for w in range(block[0]) if rng.random() < p)
    return Graph(n, edges)


MODELS = {
    "connected": (gnp,),
    "diam2": (gnp,),
    "p5free": (gnp, blow_up, cograph),
    "p3p4free": (gnp, pendant_cliques),
}


def generate(graph_class, n, count, seed, p_range=DEFAULT_P_RANGE, max_attempts=None):
    """``count`` connected members of ``graph_class`` on ``n`` vertices.

    Returns ``(graphs, report)``.  Raises :class:`GenerationError` when
    ``max_attempts`` (default ``2000 * count``) candidates were drawn without
    finding enough members.
    """
    if graph_class not in MODELS:
        raise ValueError(f"unknown class {graph_class!r}; choose from {', '.join(CLASSES)}")
    if n < 1 or count < 0:
        raise ValueError("need n >= 1 and count >= 0")
    lo, hi = p_range
    if not 0.0 <= lo <= hi <= 1.0:
        raise ValueError(f"bad probability range {p_range!r}")
    rng = random.Random(seed)
    budget = max_attempts if max_attempts is not None else 2000 * max(count, 1)
    report = GenerationReport(graph_class, n, seed)
    models = MODELS[graph_class]
    out = []
    while len(out) < count:
        if report.attempts >= budget:
            raise GenerationError(
                f"only {len(out)} of {count} {graph_class} graphs on {n} vertices after "
                f"{report.attempts} attempts (acceptance rate {report.acceptance_rate:.4f})",
                report,
            )
        model = rng.choice(models)
        g = model(rng, n, rng.uniform(lo, hi))
        report.attempts += 1
        tally = report.by_model.setdefault(model.__name__, [0, 0])
        tally[1] += 1
        if in_class(g, graph_class):
            tally[0] += 1
            report.accepted += 1
            out.append(g)
    return out, report


def enumerate_connected(n):
    """Every labelled connected graph on ``n`` vertices (no isomorph rejection).

    Fallback for when no graph6 corpus is at hand; limited to ``n <= 7``.
    """
    if n > 7:
        raise ValueError("labelled enumeration is limited to n <= 7")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        g = Graph(n, (e for k, e in enumerate(pairs) if code >> k & 1))
        if is_connected(g):
            yield g


# ---------------------------------------------------------------------------
# structured families that reach the deep branches of the solvers


def layered_clique_p5free(rng, d):
    """Two large cliques joined sparsely, plus a few hubs into the second.

    With the largest dominating clique chosen, the P5-free solver has to run
    its red phase on a big second clique.  Returns None for P5-containing draws.
    """
    a = rng.randint(3 * d + 1, 3 * d + 2)
    c = rng.randint(2 * d + 2, 2 * d + 4)
    first, second = range(a), range(a, a + c)
    edges = set(combinations(first, 2)) | set(combinations(second, 2))
    load = dict.fromkeys(first, 0)
    for v in second:
        for u in rng.sample(first, rng.randint(1, d)):
            if load[u] < d and rng.random() < 0.8:
                edges.add((u, v))
                load[u] += 1
    n = a + c + rng.randint(1, 3)
    for x in range(a + c, n):
        edges.add((rng.choice(first), x))
        edges.update((u, x) for u in second if rng.random() < 0.9)
    g = Graph(n, edges)
    return g if is_connected(g) and is_free(g, "P5") else None


_TWO_SIDED_CORE = ((0, 1), (1, 2), (2, 3), (1, 4), (3, 5), (4, 6), (4, 8), (6, 7), (8, 9), (5, 7), (5, 9))
_TWO_SIDED_OPTIONAL = (
    (2, 4), (0, 4), (1, 5), (2, 5), (0, 5), (4, 5), (5, 6), (5, 8), (0, 10),
    (1, 10), (2, 10), (3, 10), (6, 10), (7, 10), (8, 10), (9, 10), (4, 10), (5, 10),
)


def two_sided_p3p4free(rng):
    """An induced P4 0-1-2-3 whose red neighbour 4 reaches two cliques {6,7} and {8,9}.

    Random optional edges are added; draws that contain a P3+P4 or no P5 are
    rejected (None), leaving inputs where the (P3+P4)-free solver has to split
    the uncoloured region around a red vertex with red neighbours on two sides.
    """
    edges = set(_TWO_SIDED_CORE) | {e for e in _TWO_SIDED_OPTIONAL if rng.random() < 0.5}
    g = Graph(11, edges)
    if not is_connected(g) or is_free(g, "P5") or not is_free(g, "P3+P4"):
        return None
    return g


def draw(family, rng, tries, *args):
    """Up to ``tries`` draws from a structured family, rejected draws dropped."""
    out = []
    for _ in range(tries):
        g = family(rng, *args)
        if g is not None:
            out.append(g)
    return out
