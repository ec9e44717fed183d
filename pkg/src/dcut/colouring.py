"""Red-blue colourings, d-cut certificates, colour-processing and budgeted branching.

A red-blue colouring is a *d-colouring* when every vertex has at most ``d``
neighbours of the opposite colour and both colours occur.  On a connected
graph these are exactly the d-cuts: the cut is the set of bichromatic edges.

Internally colourings are a pair of vertex bitmasks ``(red, blue)``; the
public :class:`PartialColouring` wraps the same pair.
"""
from collections import deque
from dataclasses import dataclass, field

from .config import pruning_enabled
from .graph import iter_bits, mask_of

RED = "red"
BLUE = "blue"


@dataclass(frozen=True)
class PartialColouring:
    """Disjoint red set S, blue set T; the remaining vertices are uncoloured (Z)."""

    n: int
    red_mask: int = 0
    blue_mask: int = 0

    def __post_init__(self):
        if self.red_mask & self.blue_mask:
            raise ValueError("red and blue sets overlap")
        if (self.red_mask | self.blue_mask) >> self.n:
            raise ValueError("coloured vertex out of range")

    @classmethod
    def from_sets(cls, n, red=(), blue=()):
        return cls(n, mask_of(red), mask_of(blue))

    @classmethod
    def empty(cls, n):
        return cls(n)

    @property
    def red(self):
        return frozenset(iter_bits(self.red_mask))

    @property
    def blue(self):
        return frozenset(iter_bits(self.blue_mask))

    @property
    def uncoloured_mask(self):
        return ((1 << self.n) - 1) & ~(self.red_mask | self.blue_mask)

    @property
    def uncoloured(self):
        return frozenset(iter_bits(self.uncoloured_mask))

    @property
    def is_complete(self):
        return not self.uncoloured_mask

    def colour_of(self, v):
        if self.red_mask >> v & 1:
            return RED
        if self.blue_mask >> v & 1:
            return BLUE
        return None

    def is_colour_processed(self, g, d):
        """True if every uncoloured vertex has at most d red and at most d blue neighbours."""
        for v in iter_bits(self.uncoloured_mask):
            if (g.bits[v] & self.red_mask).bit_count() > d or (g.bits[v] & self.blue_mask).bit_count() > d:
                return False
        return True


@dataclass(frozen=True)
class DCutCertificate:
    red: frozenset
    blue: frozenset
    cut_edges: tuple
    d: int

    def labels(self, n):
        """Per-vertex labels, 0 for red and 1 for blue."""
        return [1 if v in self.blue else 0 for v in range(n)]

    def swapped(self):
        return DCutCertificate(self.blue, self.red, self.cut_edges, self.d)


@dataclass(frozen=True)
class Violation:
    kind: str  # "budget", "missing-colour", "cut-edges"
    vertex: int = None
    count: int = None
    detail: str = ""

    def __str__(self):
        if self.kind == "budget":
            return f"vertex {self.vertex} has {self.count} neighbours of the opposite colour"
        return self.detail


def _check_partition(g, red, blue):
    red, blue = set(red), set(blue)
    if red & blue:
        raise ValueError(f"vertices coloured both red and blue: {sorted(red & blue)}")
    everything = red | blue
    if everything != set(range(g.n)):
        missing = sorted(set(range(g.n)) - everything)
        extra = sorted(everything - set(range(g.n)))
        raise ValueError(f"red/blue do not partition V (missing {missing}, out of range {extra})")
    return mask_of(red), mask_of(blue)


def validate_colouring(g, red, blue, d):
    """Return the list of violations of the red-blue d-colouring conditions (empty if valid)."""
    rmask, bmask = _check_partition(g, red, blue)
    out = []
    for v in range(g.n):
        other = bmask if rmask >> v & 1 else rmask
        k = (g.bits[v] & other).bit_count()
        if k > d:
            out.append(Violation("budget", v, k))
    if not rmask:
        out.append(Violation("missing-colour", detail="colour red is unused"))
    if not bmask:
        out.append(Violation("missing-colour", detail="colour blue is unused"))
    return out


def is_d_colouring(g, red_mask, blue_mask, d):
    """Bitmask fast path of :func:`validate_colouring`."""
    if not red_mask or not blue_mask or red_mask & blue_mask or red_mask | blue_mask != g.full_mask:
        return False
    for v in range(g.n):
        other = blue_mask if red_mask >> v & 1 else red_mask
        if (g.bits[v] & other).bit_count() > d:
            return False
    return True


def bichromatic_edges(g, red_mask):
    return tuple((u, v) for u, v in g.edges() if (red_mask >> u & 1) != (red_mask >> v & 1))


def cut_from_colouring(g, red, blue, d):
    violations = validate_colouring(g, red, blue, d)
    if violations:
        raise ValueError("not a red-blue d-colouring: " + "; ".join(map(str, violations)))
    red_mask = mask_of(red)
    return DCutCertificate(frozenset(red), frozenset(blue), bichromatic_edges(g, red_mask), d)


def certificate_from_masks(g, red_mask, blue_mask, d):
    return DCutCertificate(
        frozenset(iter_bits(red_mask)), frozenset(iter_bits(blue_mask)), bichromatic_edges(g, red_mask), d
    )


def colouring_from_cut(g, cut_edges, d):
    """Recover ``(red, blue)`` from an edge cut; red is the side containing vertex 0."""
    cut = {tuple(sorted(e)) for e in cut_edges}
    for u, v in cut:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
    bits = list(g.bits)
    for u, v in cut:
        bits[u] &= ~(1 << v)
        bits[v] &= ~(1 << u)
    # side of vertex 0 in G - M
    side = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= bits[v]
        nxt &= ~side
        side |= nxt
        frontier = nxt
    red, blue = side, g.full_mask & ~side
    if not blue or set(bichromatic_edges(g, red)) != cut:
        raise ValueError("edge set is not an edge cut with exactly two sides")
    violations = validate_colouring(g, iter_bits(red), iter_bits(blue), d)
    if violations:
        raise ValueError("cut violates the d bound: " + "; ".join(map(str, violations)))
    return frozenset(iter_bits(red)), frozenset(iter_bits(blue))


def colour_process(g, pc, d, order="ascending"):
    """Exhaustively apply the colour-processing rules; None means infeasible.

    An uncoloured vertex with at least d+1 red neighbours becomes red, with at
    least d+1 blue neighbours becomes blue; if some originally uncoloured vertex
    ever has d+1 of each, there is no red-blue d-colouring extending ``pc``.
    ``order`` fixes the scan order ("ascending" or "descending"); the outcome
    does not depend on it.
    """
    red, blue = pc.red_mask, pc.blue_mask
    zone = pc.uncoloured_mask
    verts = list(iter_bits(zone))
    if order == "descending":
        verts.reverse()
    elif order != "ascending":
        raise ValueError(f"unknown order {order!r}")
    changed = True
    while changed:
        changed = False
        for v in verts:
            bit = 1 << v
            if (red | blue) & bit:
                continue
            r = (g.bits[v] & red).bit_count()
            b = (g.bits[v] & blue).bit_count()
            if r > d and b > d:
                return None
            if r > d:
                red |= bit
                changed = True
            elif b > d:
                blue |= bit
                changed = True
    # a vertex moved early may have collected d+1 of the other colour later
    for v in iter_bits(zone & (red | blue)):
        if (g.bits[v] & red).bit_count() > d and (g.bits[v] & blue).bit_count() > d:
            return None
    return PartialColouring(pc.n, red, blue)


def propagate(g, red, blue, d, stats=None, seeds=None, force_rules=False):
    """Colour-process plus the cheap consistency rules used while branching.

    Besides the forcing rules of :func:`colour_process` this fails as soon as a
    coloured vertex has more than d opposite neighbours ("budget"), and forces
    the uncoloured neighbours of a vertex whose opposite budget is exhausted to
    its own colour ("saturation").  Returns ``(red, blue)`` or None.

    ``seeds`` limits the initial work queue to a vertex mask; callers pass the
    closed neighbourhood of a fresh assignment when the state was already a
    fixpoint before it.  ``force_rules`` keeps the colour-processing rules on
    even when the "propagation" pruning rule is switched off, for callers whose
    correctness argument needs a colour-processed state.
    """
    if stats is not None:
        stats.propagation_calls += 1
    use_rules = force_rules or pruning_enabled("propagation")
    use_budget = pruning_enabled("budget")
    use_sat = pruning_enabled("saturation")
    if not (use_rules or use_budget or use_sat):
        return red, blue
    bits = g.bits
    if seeds is None:
        queue = deque(range(g.n))
        queued = g.full_mask
    else:
        queue = deque(iter_bits(seeds))
        queued = seeds
    while queue:
        v = queue.popleft()
        queued &= ~(1 << v)
        bit = 1 << v
        nb = bits[v]
        if red & bit or blue & bit:
            own_red = bool(red & bit)
            opp = (nb & (blue if own_red else red)).bit_count()
            if opp > d:
                if use_budget:
                    return None
                continue
            if use_sat and opp == d:
                free = nb & ~(red | blue)
                if free:
                    if own_red:
                        red |= free
                    else:
                        blue |= free
                    touched = free
                    for u in iter_bits(free):
                        touched |= bits[u]
                    for u in iter_bits(touched & ~queued):
                        queue.append(u)
                    queued |= touched
            continue
        if not use_rules:
            continue
        r = (nb & red).bit_count()
        b = (nb & blue).bit_count()
        if r > d and b > d:
            return None
        if r > d:
            red |= bit
        elif b > d:
            blue |= bit
        else:
            continue
        touched = (nb | bit) & ~queued
        for u in iter_bits(touched):
            queue.append(u)
        queued |= touched
    if use_rules and not use_budget:
        for v in iter_bits(red | blue):
            if (bits[v] & red).bit_count() > d and (bits[v] & blue).bit_count() > d:
                return None
    return red, blue


def budget_ok(g, red, blue, d, vertices=None):
    """No coloured vertex (optionally: among ``vertices``) has more than d opposite neighbours."""
    scope = (red | blue) if vertices is None else vertices & (red | blue)
    for v in iter_bits(scope):
        other = blue if red >> v & 1 else red
        if (g.bits[v] & other).bit_count() > d:
            return False
    return True


def pick_branch_vertex(g, candidates, coloured):
    """Lowest-index candidate with the most coloured neighbours."""
    best, best_k = None, -1
    for v in iter_bits(candidates):
        k = (g.bits[v] & coloured).bit_count()
        if k > best_k:
            best, best_k = v, k
    return best


def extend_masks(g, red, blue, frontier, d, stats=None, process=True, phase=None):
    """Backtracking core of :func:`extend_budgeted` on bitmasks.

    With ``process=False`` only the budget check runs between assignments, so
    exactly the vertices of ``frontier`` get coloured.
    """
    if process:
        state = propagate(g, red, blue, d, stats)
        if state is None:
            return
        red, blue = state
    elif pruning_enabled("budget") and not budget_ok(g, red, blue, d):
        return
    todo = frontier & ~(red | blue)
    if not todo:
        yield red, blue
        return
    v = pick_branch_vertex(g, todo, red | blue)
    bit = 1 << v
    if stats is not None and phase is not None:
        stats.branch(phase, 2)
    yield from extend_masks(g, red | bit, blue, frontier, d, stats, process, phase)
    yield from extend_masks(g, red, blue | bit, frontier, d, stats, process, phase)


def extend_budgeted(g, pc, frontier, d):
    """Yield colour-processed extensions of ``pc`` that colour every frontier vertex.

    Every red-blue d-colouring extending ``pc`` extends at least one yielded
    partial colouring; pruning only removes states that no d-colouring extends.
    """
    fmask = mask_of(frontier)
    if fmask & ~pc.uncoloured_mask:
        raise ValueError("frontier must consist of uncoloured vertices")
    for red, blue in extend_masks(g, pc.red_mask, pc.blue_mask, fmask, d):
        yield PartialColouring(pc.n, red, blue)


@dataclass
class Stats:
    branches_by_phase: dict = field(default_factory=dict)
    propagation_calls: int = 0
    wall_time_ms: float = 0.0
    notes: dict = field(default_factory=dict)

    def branch(self, phase, k=1):
        self.branches_by_phase[phase] = self.branches_by_phase.get(phase, 0) + k

    def note_max(self, key, value):
        if value > self.notes.get(key, -1):
            self.notes[key] = value

    def to_json(self):
        return {
            "branches_by_phase": dict(self.branches_by_phase),
            "propagation_calls": self.propagation_calls,
            "wall_time_ms": round(self.wall_time_ms, 3),
            **({"notes": dict(self.notes)} if self.notes else {}),
        }
