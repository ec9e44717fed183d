"""Route an input to the first algorithm whose class it belongs to."""
import math
import time

from ..colouring import Stats
from ..config import oracle_guard
from ..domination import min_dominating_set
from ..exceptions import Unsupported
from ..graph import diameter, require_connected
from ..patterns import is_free
from . import domset
from ._common import check_d, finish, solve_oracle
from .diameter2 import solve_diameter2
from .hplusp1 import solve_h_plus_p1
from .p3p4free import solve_p3p4_free
from .p5free import solve_p5_free

# skip the exhaustive domination search when it would test more subsets than this
DOMINATION_SEARCH_LIMIT = 2_000_000


def _greedy_dominating(g):
    left = g.full_mask
    chosen = []
    while left:
        v = max(range(g.n), key=lambda u: ((g.closed_mask(u) & left).bit_count(), -u))
        chosen.append(v)
        left &= ~g.closed_mask(v)
    return chosen


def small_dominating_set(g, cap):
    """A dominating set of size at most ``cap`` if one is found, else None."""
    greedy = _greedy_dominating(g)
    if len(greedy) <= cap:
        return frozenset(greedy)
    cost = sum(math.comb(g.n, k) for k in range(1, min(cap, g.n) + 1))
    if cost > DOMINATION_SEARCH_LIMIT:
        return None
    return min_dominating_set(g, cap)


def route(g, d):
    """Name of the algorithm :func:`solve_auto` would use, without solving."""
    return _route(g, d)[0]


def _route(g, d):
    dom = small_dominating_set(g, 3 * d)
    if dom is not None:
        return "dominating-set", dom
    if d >= 2:
        if diameter(g) <= 2:
            return "diameter-2", None
        if is_free(g, "P5"):
            return "p5-free", None
        if is_free(g, "P3+P4"):
            return "p3p4-free", None
        if is_free(g, "P5+P1"):
            return "p5+p1-free", None
        if is_free(g, "P5+2P1"):
            return "p5+2p1-free", None
    return "oracle", None


def solve_auto(g, d, stats=None, guard=None):
    """Decide d-Cut with the first applicable algorithm; ``outcome.algorithm`` names it."""
    check_d(d)
    require_connected(g)
    stats = stats or Stats()
    name, dom = _route(g, d)
    if name == "dominating-set":
        started = time.perf_counter()
        found = domset.search(g, sorted(dom), d, 0, 0, stats)
        return finish(g, d, found, stats, name, started)
    if name == "diameter-2":
        return solve_diameter2(g, d, stats)
    if name == "p5-free":
        return solve_p5_free(g, d, stats, check_class=False)
    if name == "p3p4-free":
        return solve_p3p4_free(g, d, stats, check_class=False)
    if name == "p5+p1-free":
        return solve_h_plus_p1(g, "P5", d, inner=_p5, stats=stats, check_class=False)
    if name == "p5+2p1-free":
        return solve_h_plus_p1(g, "P5+P1", d, inner=_p5p1, stats=stats, check_class=False)
    limit = oracle_guard() if guard is None else guard
    if limit is not False and g.n > limit:
        raise Unsupported("unrecognized", g.n)
    return solve_oracle(g, d, stats, guard=limit)


def _p5(g, d):
    return solve_p5_free(g, d, check_class=False)


def _p5p1(g, d):
    return solve_h_plus_p1(g, "P5", d, inner=_p5, check_class=False)
