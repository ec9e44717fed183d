"""3P2-free gadget of radius 2 and diameter 3 from split 3-SAT.

Two cliques K = {C_1..C_p, C} and K' = {D_1..D_q, D} and an independent set
of variable vertices; C_i sees the variables of the i-th positive clause, D_j
those of the j-th negative clause, and C is adjacent to D.  For d >= 3 both
cliques grow by d-3 vertices per variable (complete to that variable) and a
circulant pattern gives every vertex of K - C exactly d-2 neighbours in K' - D
and vice versa.
"""
from ..colouring import is_d_colouring
from ..exceptions import InvariantViolation
from ..graph import diameter, is_connected, radius
from ..patterns import find_induced
from ._build import Builder, GadgetOutput
from .cnf import SPLIT_POS_NEG, require_valid, satisfies

THREE_P2_GADGET = "ThreeP2Gadget"


def build_3p2_gadget(inst, d, certify=True):
    require_valid(inst, SPLIT_POS_NEG)
    if not isinstance(d, int) or d < 2:
        raise ValueError("the 3P2 gadget needs d >= 2")
    pos, neg = inst.positive_clauses, inst.negative_clauses
    n = inst.n_vars
    b = Builder()
    cs = [b.add("C", i) for i in range(1, len(pos) + 1)]
    c = b.add("C")
    ds = [b.add("D", j) for j in range(1, len(neg) + 1)]
    dd = b.add("D")
    xs = [b.add("I", h) for h in range(1, n + 1)]
    extra = max(d - 3, 0)
    ls = [[b.add("L", h, a) for a in range(1, extra + 1)] for h in range(1, n + 1)]
    lps = [[b.add("L'", h, a) for a in range(1, extra + 1)] for h in range(1, n + 1)]
    k_rest = cs + sum(ls, [])
    kp_rest = ds + sum(lps, [])
    b.clique(k_rest + [c])
    b.clique(kp_rest + [dd])
    b.join(c, dd)
    for vertex, clause in zip(cs, pos):
        for lit in clause:
            b.join(vertex, xs[lit - 1])
    for vertex, clause in zip(ds, neg):
        for lit in clause:
            b.join(vertex, xs[-lit - 1])
    for h in range(n):
        for w in ls[h] + lps[h]:
            b.join(xs[h], w)
    if d >= 3:
        s = len(k_rest)
        if s != len(kp_rest):
            raise InvariantViolation("K - C and K' - D differ in size")
        for i, u in enumerate(k_rest):
            for k in range(d - 2):
                b.join(u, kp_rest[(i + k) % s])
    g = b.graph()
    out = GadgetOutput(
        graph=g,
        role_map=list(b.roles),
        d=d,
        flavour=THREE_P2_GADGET,
        cliques={"K": tuple(k_rest + [c]), "K'": tuple(kp_rest + [dd]), "I": tuple(xs)},
    )
    if certify:
        certify_3p2_gadget(out)
    return out


def certify_3p2_gadget(gadget):
    """Check connectivity, 3P2-freeness, radius 2 and diameter at most 3.

    The diameter is exactly 3 for most instances but drops to 2 when every
    positive clause meets every negative clause and any two variables share a
    clause; the exact value is stored in ``gadget.properties``.
    """
    g = gadget.graph
    if not is_connected(g):
        raise InvariantViolation("gadget is disconnected")
    witness = find_induced(g, "3P2")
    if witness is not None:
        raise InvariantViolation(f"gadget contains an induced 3P2 at {list(witness)}")
    rad, diam = radius(g), diameter(g)
    if rad != 2 or diam > 3:
        raise InvariantViolation(f"gadget has radius {rad} and diameter {diam}, expected 2 and at most 3")
    gadget.properties.update({"three_p2_free": True, "radius": rad, "diameter": diam})


def witness_colouring_3p2(inst, assignment, d, gadget=None):
    """(red, blue) vertex sets: K red, K' blue, true variables red."""
    if not satisfies(inst, assignment):
        raise ValueError("assignment does not satisfy the instance")
    gadget = gadget or build_3p2_gadget(inst, d, certify=False)
    red = set(gadget.cliques["K"])
    blue = set(gadget.cliques["K'"])
    for h, x in enumerate(gadget.cliques["I"]):
        (red if assignment[h] else blue).add(x)
    return frozenset(red), frozenset(blue)


def assignment_from_colouring(gadget, red):
    """Read a truth assignment off a vertex colouring: true means coloured like C."""
    red = set(red)
    c = gadget.cliques["K"][-1]
    k_red = c in red
    return tuple((x in red) == k_red for x in gadget.cliques["I"])


def check_witness(gadget, red, blue, d):
    rm = bm = 0
    for v in red:
        rm |= 1 << v
    for v in blue:
        bm |= 1 << v
    return is_d_colouring(gadget.graph, rm, bm, d)
