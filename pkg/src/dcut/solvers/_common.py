import time
from dataclasses import dataclass, field

from ..colouring import Stats, certificate_from_masks, is_d_colouring, propagate
from ..exceptions import InvariantViolation, PreconditionError
from ..graph import require_connected


@dataclass
class SolveOutcome:
    decision: bool
    certificate: object = None
    stats: Stats = field(default_factory=Stats)
    algorithm: str = ""

    def __post_init__(self):
        if self.decision != (self.certificate is not None):
            raise InvariantViolation("decision and certificate disagree")


def settle(g, red, blue, d, stats=None):
    """Colour-process (always) plus whatever pruning rules are enabled."""
    return propagate(g, red, blue, d, stats, force_rules=True)


def finish(g, d, found, stats, algorithm, started):
    """Build the outcome, re-validating any witness before it leaves a solver."""
    stats.wall_time_ms = (time.perf_counter() - started) * 1000.0
    if found is None:
        return SolveOutcome(False, None, stats, algorithm)
    red, blue = found
    if not is_d_colouring(g, red, blue, d):
        raise InvariantViolation(f"{algorithm} returned an invalid colouring")
    return SolveOutcome(True, certificate_from_masks(g, red, blue, d), stats, algorithm)


def check_d(d, minimum=1):
    if not isinstance(d, int) or isinstance(d, bool) or d < minimum:
        raise ValueError(f"d must be an integer >= {minimum}, got {d!r}")


def check_connected(g):
    require_connected(g)


def class_violation(name, evidence):
    return PreconditionError(f"graph is not {name}-free; induced copy at {list(evidence)}", evidence=evidence)


def solve_oracle(g, d, stats=None, guard=None):
    """The exhaustive search wrapped as a SolveOutcome."""
    from ..oracle import oracle_solve

    check_d(d)
    started = time.perf_counter()
    stats = stats or Stats()
    cert = oracle_solve(g, d, guard=guard, stats=stats)
    found = None
    if cert is not None:
        found = _masks(cert.red), _masks(cert.blue)
    return finish(g, d, found, stats, "oracle", started)


def _masks(vertices):
    out = 0
    for v in vertices:
        out |= 1 << v
    return out
