"""Exhaustive search around a small dominating set.

Every vertex outside the dominating set ``D`` has a neighbour in ``D``.  Fix a
colouring of ``D``; then walk ``D`` in order and, for each vertex, pick at most
d of its still-uncoloured neighbours to get the opposite colour, the rest
getting its own colour.  Once ``D`` is exhausted everything is coloured.  The
number of branches is ``2^|D| * n^(d|D|)``, polynomial for fixed ``|D|`` and d.
"""
import time
from itertools import combinations, product

from ..colouring import Stats, budget_ok, is_d_colouring
from ..config import pruning_enabled
from ..domination import dominated_mask
from ..exceptions import PreconditionError
from ..graph import iter_bits, mask_of
from ._common import check_d, finish

ALGORITHM = "dominating-set"


def solve_with_dominating_set(g, dom, d, stats=None):
    """Decide d-Cut on ``g`` given a dominating set ``dom``; returns a SolveOutcome."""
    check_d(d)
    started = time.perf_counter()
    stats = stats or Stats()
    dmask = mask_of(dom)
    if dominated_mask(g, dmask) != g.full_mask:
        raise PreconditionError("the given vertex set does not dominate the graph", evidence=sorted(dom))
    stats.note_max("dominating_set_size", dmask.bit_count())
    found = search(g, list(iter_bits(dmask)), d, 0, 0, stats)
    return finish(g, d, found, stats, ALGORITHM, started)


def search(g, order, d, red, blue, stats, phase=ALGORITHM, require_red=False):
    """First complete d-colouring reachable from ``(red, blue)`` via ``order``, or None.

    Vertices of ``order`` already coloured keep their colour.  ``order`` must
    dominate every uncoloured vertex.  ``require_red`` skips colourings of
    ``order`` without a red vertex.
    """
    free_dom = [v for v in order if not (red | blue) >> v & 1]
    for choice in product((0, 1), repeat=len(free_dom)):
        if require_red and not red & mask_of(order) and all(choice):
            continue
        r, b = red, blue
        for v, c in zip(free_dom, choice):
            if c:
                b |= 1 << v
            else:
                r |= 1 << v
        stats.branch(phase)
        if pruning_enabled("budget") and not budget_ok(g, r, b, d):
            continue
        hit = _spread(g, order, 0, d, r, b, stats, phase)
        if hit is not None:
            return hit
    return None


def _spread(g, order, k, d, red, blue, stats, phase):
    if k == len(order):
        if red | blue == g.full_mask and is_d_colouring(g, red, blue, d):
            return red, blue
        return None
    u = order[k]
    free = g.bits[u] & ~(red | blue)
    own_red = red >> u & 1
    cand = list(iter_bits(free))
    for size in range(min(d, len(cand)) + 1):
        for flip in combinations(cand, size):
            fm = mask_of(flip)
            keep = free & ~fm
            r, b = (red | keep, blue | fm) if own_red else (red | fm, blue | keep)
            stats.branch(phase)
            if pruning_enabled("budget") and not budget_ok(g, r, b, d, dominated_mask(g, free | (1 << u))):
                continue
            hit = _spread(g, order, k + 1, d, r, b, stats, phase)
            if hit is not None:
                return hit
    return None
