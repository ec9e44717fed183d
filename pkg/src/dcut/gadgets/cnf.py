"""Restricted CNF instances, DIMACS text, and exhaustive satisfiability checks.

Literals follow DIMACS: variable ``h`` (1-based) is ``h`` when positive and
``-h`` when negated.
"""
from dataclasses import dataclass
from itertools import product

from ..config import DEFAULT_SAT_GUARD
from ..exceptions import DCutError, GraphFormatError, OracleGuardExceeded

NAE_ALL_POSITIVE = "NaeAllPositive"
SPLIT_POS_NEG = "SplitPosNeg"
FLAVOURS = (NAE_ALL_POSITIVE, SPLIT_POS_NEG)


class InvalidInstance(DCutError, ValueError):
    def __init__(self, violations):
        super().__init__("invalid instance: " + "; ".join(violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class CnfInstance:
    n_vars: int
    clauses: tuple
    flavour: str

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))

    @property
    def positive_clauses(self):
        return [c for c in self.clauses if all(lit > 0 for lit in c)]

    @property
    def negative_clauses(self):
        return [c for c in self.clauses if all(lit < 0 for lit in c)]

    @property
    def p(self):
        return len(self.positive_clauses)

    @property
    def q(self):
        return len(self.negative_clauses)


def validate_instance(inst):
    """Every violated restriction, as a list of messages (empty when valid)."""
    out = []
    if inst.flavour not in FLAVOURS:
        return [f"unknown flavour {inst.flavour!r}"]
    if inst.n_vars < 1:
        out.append("no variables")
    for k, clause in enumerate(inst.clauses):
        if len(clause) != 3:
            out.append(f"clause {k} has {len(clause)} literals, expected 3")
        for lit in clause:
            if not isinstance(lit, int) or lit == 0 or abs(lit) > inst.n_vars:
                out.append(f"clause {k}: literal {lit!r} out of range")
        if len({abs(lit) for lit in clause}) != len(clause):
            out.append(f"clause {k}: literals not distinct")
        if inst.flavour == NAE_ALL_POSITIVE and any(lit < 0 for lit in clause):
            out.append(f"clause {k}: negative literal in an all-positive instance")
        if inst.flavour == SPLIT_POS_NEG and not (all(lit > 0 for lit in clause) or all(lit < 0 for lit in clause)):
            out.append(f"clause {k}: mixes positive and negative literals")
    if not inst.clauses:
        out.append("no clauses")
    if inst.flavour == SPLIT_POS_NEG and not out:
        pos = [0] * (inst.n_vars + 1)
        neg = [0] * (inst.n_vars + 1)
        for clause in inst.clauses:
            for lit in clause:
                (pos if lit > 0 else neg)[abs(lit)] += 1
        for h in range(1, inst.n_vars + 1):
            if pos[h] != 2:
                out.append(f"variable {h} occurs in {pos[h]} positive clauses, expected 2")
            if neg[h] != 2:
                out.append(f"variable {h} occurs in {neg[h]} negative clauses, expected 2")
        if inst.p < 4 or inst.q < 4:
            out.append(f"need at least 4 positive and 4 negative clauses, got {inst.p} and {inst.q}")
    return out


def require_valid(inst, flavour=None):
    if flavour is not None and inst.flavour != flavour:
        raise InvalidInstance([f"expected a {flavour} instance, got {inst.flavour}"])
    problems = validate_instance(inst)
    if problems:
        raise InvalidInstance(problems)


def _value(assignment, lit):
    return assignment[abs(lit) - 1] == (lit > 0)


def satisfies(inst, assignment):
    """Flavour-appropriate satisfaction: not-all-equal, or plain 3-SAT."""
    if len(assignment) != inst.n_vars:
        raise ValueError(f"assignment has {len(assignment)} values for {inst.n_vars} variables")
    for clause in inst.clauses:
        values = [_value(assignment, lit) for lit in clause]
        if inst.flavour == NAE_ALL_POSITIVE:
            if all(values) or not any(values):
                return False
        elif not any(values):
            return False
    return True


def sat_oracle(inst, guard=DEFAULT_SAT_GUARD):
    """First satisfying assignment (tuple of bools) in lexicographic order, or None."""
    if guard is not None and inst.n_vars > guard:
        raise OracleGuardExceeded(inst.n_vars, guard)
    for bits in product((False, True), repeat=inst.n_vars):
        if satisfies(inst, bits):
            return bits
    return None


def parse_dimacs(text, flavour=None):
    """Parse ``p cnf n m`` plus 0-terminated clauses; the flavour is inferred from signs."""
    n_vars = n_clauses = None
    clauses = []
    current = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphFormatError(f"bad problem line {line!r}", lineno)
            try:
                n_vars, n_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"bad problem line {line!r}", lineno) from None
            continue
        if n_vars is None:
            raise GraphFormatError("clause before the problem line", lineno)
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError:
            raise GraphFormatError(f"bad clause line {line!r}", lineno) from None
        for lit in lits:
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if n_vars is None:
        raise GraphFormatError("missing problem line")
    if current:
        clauses.append(tuple(current))
    if len(clauses) != n_clauses:
        raise GraphFormatError(f"problem line announces {n_clauses} clauses, found {len(clauses)}")
    if flavour is None:
        flavour = SPLIT_POS_NEG if any(lit < 0 for c in clauses for lit in c) else NAE_ALL_POSITIVE
    return CnfInstance(n_vars, tuple(clauses), flavour)


def emit_dimacs(inst):
    lines = [f"c flavour {inst.flavour}", f"p cnf {inst.n_vars} {len(inst.clauses)}"]
    lines += [" ".join(str(lit) for lit in clause) + " 0" for clause in inst.clauses]
    return "\n".join(lines) + "\n"


def six_variable_example():
    """A valid split instance on six variables with four clauses of each sign."""
    pos = [(1, 2, 3), (1, 3, 4), (2, 5, 6), (4, 5, 6)]
    neg = [(-1, -2, -4), (-1, -3, -5), (-2, -4, -6), (-3, -5, -6)]
    return CnfInstance(6, tuple(pos + neg), SPLIT_POS_NEG)


def fano_instance():
    """NAE over the lines of the Fano plane: not NAE-satisfiable."""
    lines = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]
    return CnfInstance(7, tuple(lines), NAE_ALL_POSITIVE)


def random_nae_instance(n_vars, n_clauses, rng):
    clauses = [tuple(sorted(rng.sample(range(1, n_vars + 1), 3))) for _ in range(n_clauses)]
    return CnfInstance(n_vars, tuple(clauses), NAE_ALL_POSITIVE)


def _two_regular_triples(n_vars, rng, attempts=1000):
    # each variable exactly twice, split into triples of distinct variables
    for _ in range(attempts):
        pool = [h for h in range(1, n_vars + 1) for _ in range(2)]
        rng.shuffle(pool)
        triples = [tuple(sorted(pool[i : i + 3])) for i in range(0, len(pool), 3)]
        if all(len(set(t)) == 3 for t in triples):
            return triples
    raise RuntimeError(f"could not draw a 2-regular triple system on {n_vars} variables")


def random_split_instance(n_vars, rng):
    """A random valid split instance; ``n_vars`` must be a multiple of 3 and at least 6."""
    if n_vars % 3 or n_vars < 6:
        raise ValueError("split instances need n_vars divisible by 3 and at least 6")
    pos = _two_regular_triples(n_vars, rng)
    neg = [tuple(-h for h in t) for t in _two_regular_triples(n_vars, rng)]
    return CnfInstance(n_vars, tuple(pos + neg), SPLIT_POS_NEG)
