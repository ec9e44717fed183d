from ..domination import min_dominating_set
from ._common import SolveOutcome, solve_oracle
from .auto import route, solve_auto
from .diameter2 import solve_diameter2
from .domset import solve_with_dominating_set
from .hplusp1 import solve_h_plus_p1
from .p3p4free import solve_p3p4_free
from .p5free import solve_p5_free


def _domset(g, d, stats=None):
    return solve_with_dominating_set(g, min_dominating_set(g, g.n), d, stats)


def _p5_plus_p1(g, d, stats=None):
    return solve_h_plus_p1(g, "P5", d, inner=lambda h, k: solve_p5_free(h, k, check_class=False), stats=stats)


# selector name -> solver(g, d, stats)
ALGORITHMS = {
    "auto": solve_auto,
    "oracle": solve_oracle,
    "diam2": solve_diameter2,
    "p5free": solve_p5_free,
    "p3p4free": solve_p3p4_free,
    "domset": _domset,
    "p5p1free": _p5_plus_p1,
}


def solve(g, d, algo="auto", stats=None):
    """Run the solver registered under ``algo``."""
    try:
        solver = ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}") from None
    return solver(g, d, stats=stats)


__all__ = [
    "ALGORITHMS",
    "SolveOutcome",
    "route",
    "solve",
    "solve_auto",
    "solve_diameter2",
    "solve_h_plus_p1",
    "solve_oracle",
    "solve_p3p4_free",
    "solve_p5_free",
    "solve_with_dominating_set",
]
