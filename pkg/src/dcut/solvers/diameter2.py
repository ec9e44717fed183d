"""d-Cut on connected graphs of diameter at most 2.

One vertex v is fixed red and the search branches over which (at most d) of
its neighbours are blue.  After colour-processing, every uncoloured vertex has
at most 2d coloured neighbours.  Let Z be the uncoloured set:

* G[Z] disconnected: pick v1, v2 in different components.  Any two vertices of
  Z in different components have a common (coloured) neighbour, so at most 2d
  coloured neighbours of v1 (resp. v2) reach every other component (resp. the
  component of v1).  Colouring the neighbourhoods of these sets colours Z.
* G[Z] connected with radius at least 3: the vertices far from some z in G[Z]
  share a coloured neighbour with z, so they are coloured by branching first.
* otherwise: colour a dominating ball {z} + N(z) of G[Z] and re-process.  Each
  ball step gives every remaining vertex a new coloured neighbour, so there are
  at most 2d+1 of them on any branch.
"""
import time
from itertools import combinations

from ..colouring import Stats, extend_masks, is_d_colouring
from ..config import invariants_checked
from ..domination import dominated_mask
from ..exceptions import InvariantViolation, PreconditionError
from ..graph import INF, bfs_distances, component_masks, diameter, eccentricity, iter_bits, mask_of, require_connected
from ._common import check_d, finish, settle

ALGORITHM = "diameter-2"


def _far_pair(g):
    for v in range(g.n):
        dist = bfs_distances(g, v)
        for u in range(g.n):
            if dist.get(u, INF) > 2:
                return (v, u)
    return None


def solve_diameter2(g, d, stats=None):
    check_d(d, 2)
    require_connected(g)
    if diameter(g) > 2:
        raise PreconditionError("graph has diameter greater than 2", evidence=_far_pair(g))
    started = time.perf_counter()
    stats = stats or Stats()
    return finish(g, d, _solve(g, d, stats), stats, ALGORITHM, started)


def _solve(g, d, stats):
    if g.n < 2:
        return None
    v = 0
    nbrs = list(g.adj[v])
    outside = g.full_mask & ~g.closed_mask(v)
    for k in range(min(d, len(nbrs)) + 1):
        for chosen in combinations(nbrs, k):
            b0 = mask_of(chosen)
            r0 = g.closed_mask(v) & ~b0
            if k:
                stats.branch("diam2-start")
                hit = _run(g, d, r0, b0, 0, stats)
                if hit is not None:
                    return hit
                continue
            for x in iter_bits(outside):
                stats.branch("diam2-start")
                hit = _run(g, d, r0, 1 << x, 0, stats)
                if hit is not None:
                    return hit
    return None


def _run(g, d, red, blue, balls, stats):
    state = settle(g, red, blue, d, stats)
    if state is None:
        return None
    red, blue = state
    coloured = red | blue
    z_mask = g.full_mask & ~coloured
    if not z_mask:
        return (red, blue) if is_d_colouring(g, red, blue, d) else None
    if invariants_checked():
        for u in iter_bits(z_mask):
            if (g.bits[u] & coloured).bit_count() > 2 * d:
                raise InvariantViolation(f"uncoloured vertex {u} has more than 2d coloured neighbours")
    comps = component_masks(g, z_mask)
    if len(comps) > 1:
        return _case_disconnected(g, d, red, blue, comps, stats)
    ecc = {u: eccentricity(g, u, within=z_mask) for u in iter_bits(z_mask)}
    if min(ecc.values()) >= 3:
        z = min(ecc)
        dist = bfs_distances(g, z, within=z_mask)
        far = mask_of(u for u in iter_bits(z_mask) if dist[u] >= 3)
        # far vertices share a coloured neighbour with z; colour them first
        for r, b in extend_masks(g, red, blue, far, d, stats, phase="diam2-far"):
            hit = _run(g, d, r, b, balls, stats)
            if hit is not None:
                return hit
        return None
    centre = min(ecc, key=lambda u: (ecc[u], u))
    ball = (g.bits[centre] & z_mask) | (1 << centre)
    balls += 1
    stats.note_max("diam2_ball_steps", balls)
    if invariants_checked() and balls > 2 * d + 1:
        raise InvariantViolation(f"{balls} ball steps on one branch, bound is 2d+1")
    for r, b in extend_masks(g, red, blue, ball, d, stats, phase="diam2-ball"):
        hit = _run(g, d, r, b, balls, stats)
        if hit is not None:
            return hit
    return None


def _case_disconnected(g, d, red, blue, comps, stats):
    coloured = red | blue
    z_mask = g.full_mask & ~coloured
    first = comps[0]
    rest = z_mask & ~first
    v1 = min(iter_bits(first))
    v2 = min(iter_bits(comps[1]))
    n1 = g.bits[v1] & coloured & _touching(g, rest)
    n2 = g.bits[v2] & coloured & _touching(g, first)
    if invariants_checked():
        if dominated_mask(g, n1) & rest != rest or dominated_mask(g, n2) & first != first:
            raise InvariantViolation("common-neighbour sets do not reach every uncoloured vertex")
    stats.note_max("diam2_common_sets", max(n1.bit_count(), n2.bit_count()))
    frontier = dominated_mask(g, n1 | n2) & z_mask
    for r, b in extend_masks(g, red, blue, frontier, d, stats, phase="diam2-split"):
        if r | b == g.full_mask and is_d_colouring(g, r, b, d):
            return r, b
    return None


def _touching(g, mask):
    out = 0
    for u in iter_bits(mask):
        out |= g.bits[u]
    return out
