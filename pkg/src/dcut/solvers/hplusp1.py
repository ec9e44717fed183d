"""Lifting an H-free solver to (H+P1)-free graphs.

In an (H+P1)-free graph any induced copy of H dominates, so either the graph
is H-free (hand it to the inner solver) or a dominating set of |V(H)| vertices
is at hand.
"""
import time

from ..colouring import Stats
from ..domination import dominated_mask
from ..exceptions import PreconditionError
from ..graph import mask_of, require_connected
from ..patterns import find_induced, plus_p1
from . import domset
from ._common import check_d, class_violation, finish, solve_oracle

ALGORITHM = "h-plus-p1"


def solve_h_plus_p1(g, h, d, inner=None, stats=None, check_class=True):
    """Decide d-Cut on a connected (h+P1)-free graph.

    ``h`` is a pattern name; ``inner(g, d)`` must return a SolveOutcome for
    connected h-free graphs (default: the exhaustive oracle under its guard).
    """
    check_d(d)
    require_connected(g)
    if check_class:
        witness = find_induced(g, plus_p1(h))
        if witness is not None:
            raise class_violation(plus_p1(h), witness)
    copy = find_induced(g, h)
    if copy is None:
        return (inner or solve_oracle)(g, d)
    started = time.perf_counter()
    stats = stats or Stats()
    cmask = mask_of(copy)
    if dominated_mask(g, cmask) != g.full_mask:
        raise PreconditionError(f"induced {h} at {list(copy)} does not dominate; graph is not {plus_p1(h)}-free", copy)
    stats.notes["dominating_copy"] = sorted(copy)
    found = domset.search(g, sorted(copy), d, 0, 0, stats, phase="h-plus-p1")
    return finish(g, d, found, stats, ALGORITHM, started)
