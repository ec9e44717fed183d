"""d-Cut on connected (P3+P4)-free graphs.

Graphs without an induced P5 go to the P5-free solver.  Otherwise the search
runs in two steps.

Step 1 looks for a colouring in which some induced P4 is monochromatic (blue,
by symmetry).  With N1 = N(P) and N2 = V - N[P], every component of G[N2] is a
clique.  The search branches over the colourings of N1; if some vertex of N1 is
red it also colours N(S) for the red set S, then normalizes: colour-process,
move new blue N2 vertices into N1, and settle components that are forced.  The
uncoloured vertices left over then fall into groups that can be completed
independently of each other.

Step 2 looks for a colouring in which every induced P4 is bichromatic.  Such
a colouring can be taken with both colour classes of diameter at most 2, which
pins down everything once N[P], the component of one uncoloured vertex x and
the neighbourhoods of x's coloured neighbours in N1 are fixed: every remaining
vertex gets the colour opposite to x.
"""
import time

from ..colouring import Stats, budget_ok, extend_masks, is_d_colouring
from ..config import invariants_checked
from ..domination import dominated_mask
from ..exceptions import InvariantViolation
from ..graph import component_masks, iter_bits, mask_of, require_connected
from ..patterns import find_induced, is_free, iter_induced
from ._common import check_d, class_violation, finish, settle
from .p5free import solve_p5_free

ALGORITHM = "p3p4-free"


def solve_p3p4_free(g, d, stats=None, check_class=True, delegate_p5=True):
    """Decide d-Cut on a connected (P3+P4)-free graph.

    ``delegate_p5=False`` runs both steps even on P5-free inputs that contain
    an induced P4 (the steps are correct there too); it exists for testing.
    """
    check_d(d, 2)
    require_connected(g)
    if check_class:
        witness = find_induced(g, "P3+P4")
        if witness is not None:
            raise class_violation("P3+P4", witness)
    started = time.perf_counter()
    stats = stats or Stats()
    p4s = list(iter_induced(g, "P4"))
    if not p4s or (delegate_p5 and is_free(g, "P5")):
        stats.notes["delegated"] = "p5-free"
        return solve_p5_free(g, d, stats=stats, check_class=False)
    found = _step1(g, d, p4s, stats)
    if found is None:
        found = _step2(g, d, mask_of(p4s[0]), stats)
    return finish(g, d, found, stats, ALGORITHM, started)


def _open_nbhd(g, mask):
    out = 0
    for v in iter_bits(mask):
        out |= g.bits[v]
    return out


def _is_clique(g, mask):
    return all(not (mask & ~(1 << v) & ~g.bits[v]) for v in iter_bits(mask))


# ---------------------------------------------------------------------------
# Step 1: some induced P4 is monochromatic


def _step1(g, d, p4s, stats):
    full = g.full_mask
    for quad in p4s:
        pm = mask_of(quad)
        n1 = _open_nbhd(g, pm) & ~pm
        n2 = full & ~(pm | n1)
        comps = component_masks(g, n2)
        if invariants_checked():
            for comp in comps:
                if not _is_clique(g, comp):
                    raise InvariantViolation(
                        f"component {sorted(iter_bits(comp))} of G - N[P] is not a clique", evidence=quad
                    )
        stats.branch("p3p4-p4")
        for red, blue in extend_masks(g, 0, pm, n1, d, stats, process=False, phase="p3p4-n1"):
            if red:
                hit = _red_boundary(g, d, pm, n1, red, blue, stats)
            else:
                hit = _blue_boundary(g, d, comps, red, blue, stats)
            if hit is not None:
                return hit
    return None


def _blue_boundary(g, d, comps, red, blue, stats):
    # P and N1 all blue: the red side lives inside one component of G[N2]
    n2 = 0
    for comp in comps:
        n2 |= comp
    for comp in comps:
        b = blue | (n2 & ~comp)
        for r2, b2 in extend_masks(g, red, b, comp, d, stats, process=False, phase="p3p4-blue-boundary"):
            if is_d_colouring(g, r2, b2, d):
                return r2, b2
    return None


def _red_boundary(g, d, pm, n1, red, blue, stats):
    s = red & n1
    front = _open_nbhd(g, s) & ~(red | blue)
    for r, b in extend_masks(g, red, blue, front, d, stats, process=False, phase="p3p4-ns"):
        state = _normalize(g, d, pm, n1, r, b, stats)
        if state is None:
            continue
        r, b, n1b = state
        if r | b == g.full_mask:
            if is_d_colouring(g, r, b, d):
                return r, b
            continue
        if invariants_checked():
            _check_open_components(g, d, pm, n1b, s, r, b)
        hit = _split(g, d, pm, n1b, s, r, b, stats)
        if hit is not None:
            return hit
    return None


def _normalize(g, d, pm, n1, red, blue, stats):
    """Colour-process, N1-update and settle forced components, to a fixpoint."""
    full = g.full_mask
    while True:
        state = settle(g, red, blue, d, stats)
        if state is None:
            return None
        red, blue = state
        n1 |= blue & ~(pm | n1)
        n2 = full & ~(pm | n1)
        unc = full & ~(red | blue)
        changed = False
        for comp in component_masks(g, n2):
            cu = comp & unc
            if not cu:
                continue
            if cu == comp:
                # only blue neighbours outside, so blue is always safe
                blue |= comp
            elif comp.bit_count() >= 2 * d + 1:
                red |= cu
            elif not any(g.bits[u] & blue for u in iter_bits(cu)):
                red |= cu
            else:
                continue
            changed = True
        if not changed:
            return red, blue, n1


def _open_components(g, pm, n1, unc):
    n2 = g.full_mask & ~(pm | n1)
    return [comp for comp in component_masks(g, n2) if comp & unc]


def _check_open_components(g, d, pm, n1, s, red, blue):
    unc = g.full_mask & ~(red | blue)
    blue_n1 = blue & n1
    for comp in _open_components(g, pm, n1, unc):
        where = sorted(iter_bits(comp))
        cu = comp & unc
        if not _is_clique(g, comp):
            raise InvariantViolation(f"open component {where} is not a clique")
        if comp.bit_count() > 2 * d:
            raise InvariantViolation(f"open component {where} has more than 2d vertices")
        if not any(g.bits[v] & s for v in iter_bits(comp & red)):
            raise InvariantViolation(f"open component {where} has no red vertex with a red neighbour in S")
        if not any(g.bits[u] & blue_n1 for u in iter_bits(cu)):
            raise InvariantViolation(f"open component {where} has no uncoloured vertex with a blue neighbour in N1")
        if comp & blue:
            raise InvariantViolation(f"open component {where} contains a blue vertex")
        if any(g.bits[u] & red & n1 for u in iter_bits(cu)):
            raise InvariantViolation(f"open component {where} has an uncoloured vertex with a red neighbour in N1")


def _split(g, d, pm, n1, s, red, blue, stats):
    unc = g.full_mask & ~(red | blue)
    comps = _open_components(g, pm, n1, unc)
    for r in iter_bits(s):
        touched = [comp for comp in comps if g.bits[r] & comp & red]
        if len(touched) >= 2:
            return _two_sided(g, d, n1, comps, touched[0], touched[1], red, blue, stats)
    return _one_sided(g, d, pm, n1, s, comps, red, blue, stats)


def _two_sided(g, d, n1, comps, fa, fb, red, blue, stats):
    # some red N1 vertex has red neighbours in two open components
    unc = g.full_mask & ~(red | blue)
    others = [comp for comp in comps if comp not in (fa, fb)]
    t_set = 0
    for t in iter_bits(blue & n1):
        if sum(1 for comp in others if g.bits[t] & comp & unc) >= 2:
            t_set |= 1 << t
    stats.note_max("p3p4_T_size", t_set.bit_count())
    frontier = (_open_nbhd(g, t_set) | fa | fb) & unc
    for r, b in extend_masks(g, red, blue, frontier, d, stats, phase="p3p4-two-sided"):
        hit = _complete_blocks(g, d, r, b, stats)
        if hit is not None:
            return hit
    return None


def _one_sided(g, d, pm, n1, s, comps, red, blue, stats):
    unc = g.full_mask & ~(red | blue)
    f1 = comps[0]
    x = min(iter_bits(f1 & unc))
    anchors = [(v, r) for v in iter_bits(f1 & red) for r in iter_bits(g.bits[v] & s)]
    if not anchors:
        raise InvariantViolation("first open component has no red vertex with a red neighbour in S")
    r1, r = anchors[0]
    j_set = (1 << x) | (1 << r1) | (1 << r)
    gamma = blue & _open_nbhd(g, j_set)
    stats.note_max("p3p4_gamma_size", gamma.bit_count())
    frontier = (_open_nbhd(g, gamma) | f1) & unc
    for rr, bb in extend_masks(g, red, blue, frontier, d, stats, phase="p3p4-one-sided"):
        state = _normalize(g, d, pm, n1, rr, bb, stats)
        if state is None:
            continue
        rr, bb, n1b = state
        _note_collective(g, pm, n1b, rr, bb, stats)
        hit = _complete_blocks(g, d, rr, bb, stats)
        if hit is not None:
            return hit
    return None


def _note_collective(g, pm, n1, red, blue, stats):
    """Record how many open components a blue N1 vertex touches while adjacent to all of them."""
    unc = g.full_mask & ~(red | blue)
    comps = _open_components(g, pm, n1, unc)
    worst = 0
    for b in iter_bits(blue & n1):
        hit = [comp for comp in comps if g.bits[b] & comp & unc]
        if len(hit) >= 2 and all(comp & ~g.bits[b] == 0 for comp in hit):
            worst = max(worst, len(hit))
    stats.note_max("p3p4_collective_per_blue", worst)


def _blocks(g, unc, coloured):
    """Group uncoloured vertices linked by an edge or by a shared coloured neighbour."""
    link = {}
    for u in iter_bits(unc):
        link[u] = (g.bits[u] & unc) | (_open_nbhd(g, g.bits[u] & coloured) & unc)
    out = []
    left = unc
    while left:
        seed = left & -left
        block = seed
        frontier = seed
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= link[u]
            frontier = nxt & ~block
            block |= nxt
        out.append(block)
        left &= ~block
    return out


def _complete_blocks(g, d, red, blue, stats):
    """Finish a state whose uncoloured blocks do not interact."""
    unc = g.full_mask & ~(red | blue)
    if not unc:
        return (red, blue) if is_d_colouring(g, red, blue, d) else None
    if not red or not blue:
        for r, b in extend_masks(g, red, blue, unc, d, stats, phase="p3p4-block"):
            if is_d_colouring(g, r, b, d):
                return r, b
        return None
    for block in _blocks(g, unc, red | blue):
        stats.note_max("p3p4_block_size", block.bit_count())
        scope = dominated_mask(g, block)
        done = None
        for r, b in extend_masks(g, red, blue, block, d, stats, process=False, phase="p3p4-block"):
            if budget_ok(g, r, b, d, scope):
                done = r, b
                break
        if done is None:
            return None
        red, blue = done
    return (red, blue) if is_d_colouring(g, red, blue, d) else None


# ---------------------------------------------------------------------------
# Step 2: every induced P4 is bichromatic


def _step2(g, d, pm, stats):
    full = g.full_mask
    closed = dominated_mask(g, pm)
    n1 = closed & ~pm
    n2 = full & ~closed
    for red, blue in extend_masks(g, 0, 0, closed, d, stats, process=False, phase="p3p4-closed"):
        state = settle(g, red, blue, d, stats)
        if state is None:
            continue
        red, blue = state
        unc = full & ~(red | blue)
        if not unc:
            if is_d_colouring(g, red, blue, d):
                return red, blue
            continue
        f1 = next(comp for comp in component_masks(g, n2) if comp & unc)
        x = min(iter_bits(f1 & unc))
        anchors = g.bits[x] & n1 & (red | blue)
        frontier = (_open_nbhd(g, anchors) | f1) & unc
        for r, b in extend_masks(g, red, blue, frontier, d, stats, process=False, phase="p3p4-pinned"):
            rest = full & ~(r | b)
            if r >> x & 1:
                b |= rest
            else:
                r |= rest
            if is_d_colouring(g, r, b, d):
                return r, b
    return None
