"""Dominating sets: exhaustive minimum search and dominating clique / C5 search."""
from itertools import combinations

from .config import invariants_checked
from .exceptions import DominatingStructureNotFound, InvariantViolation
from .graph import induced_subgraph, iter_bits, mask_of
from .patterns import iter_induced


def dominated_mask(g, mask):
    """N[S] as a bitmask."""
    out = mask
    for v in iter_bits(mask):
        out |= g.bits[v]
    return out


def dominates(g, vertices, within=None):
    target = g.full_mask if within is None else within
    return dominated_mask(g, mask_of(vertices)) & target == target


def min_dominating_set(g, cap):
    """A smallest dominating set if the domination number is at most ``cap``, else None."""
    if g.n == 0:
        return frozenset()
    full = g.full_mask
    closed = [g.closed_mask(v) for v in range(g.n)]
    for k in range(1, min(cap, g.n) + 1):
        for combo in combinations(range(g.n), k):
            acc = 0
            for v in combo:
                acc |= closed[v]
            if acc == full:
                return frozenset(combo)
    return None


def _is_clique(g, mask):
    for v in iter_bits(mask):
        if (mask & ~(1 << v)) & ~g.bits[v]:
            return False
    return True


def _maximal_cliques(g, within):
    # Bron–Kerbosch with pivoting, on bitmasks.
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: (g.bits[u] & p).bit_count())
        for v in iter_bits(p & ~g.bits[pivot]):
            expand(r | (1 << v), p & g.bits[v], x & g.bits[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, within, 0)
    return out


def _shrink(g, mask, within):
    # Drop vertices, highest index first, while the rest still dominates.
    for v in sorted(iter_bits(mask), reverse=True):
        smaller = mask & ~(1 << v)
        if smaller and dominated_mask(g, smaller) & within == within:
            mask = smaller
    return mask


def find_dominating_clique_or_c5(g, within=None, prefer="smallest"):
    """Return ``(vertices, kind)`` with ``kind`` in ``{"clique", "c5"}``.

    The vertex set dominates G[within] (default: all of G) and induces a clique
    or a 5-cycle.  With ``prefer="smallest"`` the smallest candidate found is
    returned, cliques winning ties; ``prefer="largest"`` returns the largest
    dominating maximal clique unshrunk (falling back to a C5), which is mostly
    useful for exercising the large-clique branches of the P5-free solver.
    Raises :class:`DominatingStructureNotFound` when none exists, which for a
    connected input means it was not P5-free.
    """
    if prefer not in ("smallest", "largest"):
        raise ValueError(f"prefer must be 'smallest' or 'largest', got {prefer!r}")
    target = g.full_mask if within is None else within
    if not target:
        raise DominatingStructureNotFound("empty vertex set has no dominating structure")
    best = None
    largest = prefer == "largest"
    for clique in _maximal_cliques(g, target):
        if dominated_mask(g, clique) & target != target:
            continue
        if not largest:
            clique = _shrink(g, clique, target)
        size = clique.bit_count()
        if best is None or (size > best.bit_count() if largest else size < best.bit_count()) or (
            size == best.bit_count() and clique < best
        ):
            best = clique
    kind = "clique"
    if best is None or (not largest and best.bit_count() > 5):
        sub, index_map = induced_subgraph(g, iter_bits(target))
        for cyc in iter_induced(sub, "C5"):
            m = mask_of(index_map[i] for i in cyc)
            if dominated_mask(g, m) & target == target:
                best, kind = m, "c5"
                break
    if best is None:
        raise DominatingStructureNotFound(
            "no dominating clique or dominating induced C5; the graph is not connected and P5-free"
        )
    result = frozenset(iter_bits(best))
    if invariants_checked():
        _check_structure(g, best, kind, target)
    return result, kind


def _check_structure(g, mask, kind, target):
    if dominated_mask(g, mask) & target != target:
        raise InvariantViolation("dominating structure does not dominate")
    if kind == "clique" and not _is_clique(g, mask):
        raise InvariantViolation("dominating clique is not a clique")
    if kind == "c5":
        degs = [(g.bits[v] & mask).bit_count() for v in iter_bits(mask)]
        if mask.bit_count() != 5 or degs != [2] * 5:
            raise InvariantViolation("dominating C5 is not an induced 5-cycle")
