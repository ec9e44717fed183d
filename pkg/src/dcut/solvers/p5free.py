"""d-Cut on connected P5-free graphs.

Start from a dominating set D inducing a clique or a C5.  Small D goes to the
dominating-set search.  A large D is a clique of size at least 3d+1, hence
monochromatic, say blue.  The blue phase then descends through levels: L_h is
a component of L_{h-1} - D_{h-1} (the other components turn blue) and D_h is a
dominating clique or C5 of L_h.  A branch quits at level i by making some
vertex of D_i red; every vertex outside L_i is blue at that point.  The red
phase finishes L_i by a small-set search when |D_i| <= 2d+1, or, when D_i is a
clique large enough to be monochromatic red, by a short chain of branchings
whose length is at most d.
"""
import time

from ..colouring import Stats, budget_ok, extend_masks, is_d_colouring
from ..config import invariants_checked
from ..domination import find_dominating_clique_or_c5
from ..exceptions import InvariantViolation
from ..graph import component_masks, iter_bits, mask_of, require_connected
from ..patterns import find_induced
from . import domset
from ._common import check_d, class_violation, finish

ALGORITHM = "p5-free"


def solve_p5_free(g, d, stats=None, check_class=True, prefer="smallest"):
    """Decide d-Cut on a connected P5-free graph.

    ``prefer`` selects which dominating clique / C5 is used at every level (see
    :func:`find_dominating_clique_or_c5`); the decision does not depend on it.
    """
    check_d(d, 2)
    require_connected(g)
    if check_class:
        witness = find_induced(g, "P5")
        if witness is not None:
            raise class_violation("P5", witness)
    started = time.perf_counter()
    stats = stats or Stats()
    dom, kind = find_dominating_clique_or_c5(g, prefer=prefer)
    stats.notes["dominating_structure"] = f"{kind}:{len(dom)}"
    if len(dom) <= 3 * d:
        found = domset.search(g, sorted(dom), d, 0, 0, stats, phase="p5-small-dom")
        return finish(g, d, found, stats, ALGORITHM, started)
    if kind != "clique":
        raise InvariantViolation("a dominating C5 cannot exceed 3d vertices")
    dmask = mask_of(dom)
    found = None
    if dmask != g.full_mask:
        found = _blue_phase(g, d, dmask, 1, g.full_mask & ~dmask, dmask, stats, prefer)
    return finish(g, d, found, stats, ALGORITHM, started)


def _blue_phase(g, d, dmask, level, region, blue, stats, prefer):
    """Try every choice of L_level inside ``region`` (everything else is blue)."""
    for comp in component_masks(g, region):
        stats.branch("p5-blue")
        b = blue | (region & ~comp)
        di, kind = find_dominating_clique_or_c5(g, within=comp, prefer=prefer)
        di_mask = mask_of(di)
        stats.note_max("p5_level", level)
        hit = _red_phase(g, d, dmask, comp, di_mask, kind, b, stats)
        if hit is not None:
            return hit
        deeper = comp & ~di_mask
        if level < d and deeper:
            hit = _blue_phase(g, d, dmask, level + 1, deeper, b | di_mask, stats, prefer)
            if hit is not None:
                return hit
    return None


def _red_phase(g, d, dmask, level_mask, di_mask, kind, blue, stats):
    if di_mask.bit_count() <= 2 * d + 1:
        order = list(iter_bits(di_mask))
        return domset.search(g, order, d, 0, blue, stats, phase="p5-red-small", require_red=True)
    if kind != "clique":
        raise InvariantViolation("a dominating C5 cannot exceed 2d+1 vertices")
    red = di_mask
    for x in iter_bits(di_mask):
        if (g.bits[x] & dmask).bit_count() > d:
            return None
    for y in iter_bits(dmask):
        if (g.bits[y] & di_mask).bit_count() > d:
            return None
    rest = level_mask & ~di_mask
    for u in iter_bits(rest):
        if (g.bits[u] & dmask).bit_count() >= d + 1:
            blue |= 1 << u
    stats.branch("p5-red-large")
    return _chain(g, d, dmask, di_mask, red, blue, 0, None, stats)


def _chain(g, d, dmask, di_mask, red, blue, p, y1, stats):
    free = g.full_mask & ~(red | blue)
    if not free:
        return (red, blue) if is_d_colouring(g, red, blue, d) else None
    if not budget_ok(g, red, blue, d):
        return None
    w = min(iter_bits(free))
    x = min(iter_bits(g.bits[w] & di_mask))
    p += 1
    stats.note_max("p5_chain_length", p)
    if invariants_checked() and p > d:
        raise InvariantViolation(f"red-phase chain reached p={p} > d={d}")
    frontier = g.bits[x]
    if y1 is None:
        y1 = min(iter_bits(g.bits[x] & dmask))
        frontier |= g.bits[y1]
    frontier &= free
    for r, b in extend_masks(g, red, blue, frontier, d, stats, phase="p5-chain"):
        hit = _chain(g, d, dmask, di_mask, r, b, p, y1, stats)
        if hit is not None:
            return hit
    return None
