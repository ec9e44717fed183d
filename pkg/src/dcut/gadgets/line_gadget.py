"""Line-graph gadget from all-positive NAE-3SAT (for d >= 3).

The pre-line graph G has two cliques S and S-bar, two cliques V_x and V_xbar
per variable, a connector v_x per variable and a vertex v_c per clause.  All
named cliques are padded to at least 2d+2 vertices, which makes each of them
monochromatic in every red-blue edge d-colouring.
"""
from ..colouring import BLUE, RED, PartialColouring, colour_process
from ..exceptions import InvariantViolation
from ..graph import Graph, line_graph
from ..oracle import oracle_solve, validate_edge_colouring
from ._build import Builder, GadgetOutput, Role
from .cnf import NAE_ALL_POSITIVE, require_valid, satisfies

LINE_GADGET = "LineGadget"


def _layout(inst, d):
    b = Builder()
    n, m = inst.n_vars, len(inst.clauses)
    s_con = [b.add("S", h) for h in range(1, n + 1)]
    s_port = [[b.add("S", j + 1, i) for i in range(1, d - 1)] for j in range(m)]
    sb_con = [b.add("S_bar", h) for h in range(1, n + 1)]
    sb_port = [[b.add("S_bar", j + 1, i) for i in range(1, d - 1)] for j in range(m)]
    vx = {}
    vxb = {}
    for h in range(1, n + 1):
        vx[h] = [b.add("V_x", h, i) for i in range(1, d)]
        vxb[h] = [b.add("V_xbar", h, i) for i in range(1, d)]
    conn = {}
    for h in range(1, n + 1):
        v = conn[h] = b.add("v_x", h)
        for u in [s_con[h - 1], sb_con[h - 1]] + vx[h] + vxb[h]:
            b.join(v, u)
    for j, clause in enumerate(inst.clauses):
        vc = b.add("v_c", j + 1)
        for u in s_port[j] + sb_port[j]:
            b.join(vc, u)
        for lit in clause:
            occ = b.add("V_x", lit, 0, j + 1)
            vx[lit].append(occ)
            b.join(vc, occ)
    cliques = {"S": s_con + sum(s_port, []), "S_bar": sb_con + sum(sb_port, [])}
    for h in range(1, n + 1):
        cliques[f"V_x{h}"] = vx[h]
        cliques[f"V_xbar{h}"] = vxb[h]
    target = 2 * d + 2
    for k, (name, members) in enumerate(cliques.items()):
        for a in range(target - len(members)):
            members.append(b.add("aux", k, a))
        b.clique(members)
    return b, {name: tuple(members) for name, members in cliques.items()}


def build_line_gadget(inst, d):
    """Pre-line graph G (``pre_graph``) and its line graph (``graph``).

    Role indices on G: connectors of S and S-bar carry ``[h]``, their clause
    ports ``[j, i]``; V_x members ``[h, i]`` and the clause occurrence vertices
    ``[h, 0, j]``; padding vertices are ``aux`` with ``[clique number, k]`` in
    the order of ``cliques``.  Variables and clauses are numbered from 1.
    """
    require_valid(inst, NAE_ALL_POSITIVE)
    if not isinstance(d, int) or d < 3:
        raise ValueError("the line-graph gadget needs d >= 3")
    b, cliques = _layout(inst, d)
    g = b.graph()
    for name, members in cliques.items():
        if len(members) < 2 * d + 2:
            raise InvariantViolation(f"clique {name} has {len(members)} < 2d+2 vertices")
    lg, edge_list = line_graph(g)
    return GadgetOutput(
        graph=lg,
        role_map=[Role("edge", e) for e in edge_list],
        d=d,
        flavour=LINE_GADGET,
        cliques=cliques,
        pre_graph=g,
        pre_role_map=list(b.roles),
        edge_list=edge_list,
    )


def clique_colours(inst, assignment):
    """Colour of every named clique under ``assignment`` (S red, S-bar blue)."""
    out = {"S": RED, "S_bar": BLUE}
    for h in range(1, inst.n_vars + 1):
        true = assignment[h - 1]
        out[f"V_x{h}"] = RED if true else BLUE
        out[f"V_xbar{h}"] = BLUE if true else RED
    return out


def witness_edge_colouring(inst, assignment, d, gadget=None):
    """Red-blue edge d-colouring of the pre-line graph built from an NAE assignment."""
    if not satisfies(inst, assignment):
        raise ValueError("assignment is not not-all-equal satisfying")
    gadget = gadget or build_line_gadget(inst, d)
    colour_of = {}
    for name, colour in clique_colours(inst, assignment).items():
        for v in gadget.cliques[name]:
            colour_of[v] = colour
    ec = {}
    for u, v in gadget.pre_graph.edges():
        if u in colour_of and v in colour_of:
            # both ends in named cliques: an edge inside one clique
            ec[(u, v)] = colour_of[u]
        else:
            ec[(u, v)] = colour_of[u] if u in colour_of else colour_of[v]
    return ec


def edge_colouring_to_vertex_masks(gadget, ec):
    """Image of an edge colouring on the line graph as ``(red, blue)`` bitmasks."""
    red = blue = 0
    for i, e in enumerate(gadget.edge_list):
        if ec[e] == RED:
            red |= 1 << i
        else:
            blue |= 1 << i
    return red, blue


def mixed_seed_is_infeasible(gadget, name, d):
    """Seed clique ``name`` with both colours in L(G) and check colour-processing fails.

    At one clique vertex u, d+1 clique edges are made red; at another vertex
    u', d+1 clique edges are made blue.  The edge uu' then has d+1 neighbours of
    each colour.
    """
    members = gadget.cliques[name]
    u, u2 = members[0], members[1]
    others = [w for w in members if w not in (u, u2)]
    if len(others) < d + 1:
        raise ValueError(f"clique {name} too small to seed")
    index = {e: i for i, e in enumerate(gadget.edge_list)}
    red = {index[tuple(sorted((u, w)))] for w in others[: d + 1]}
    blue = {index[tuple(sorted((u2, w)))] for w in others[-(d + 1) :]}
    pc = PartialColouring.from_sets(gadget.graph.n, red, blue)
    return colour_process(gadget.graph, pc, d) is None


def clique_forces_monochromatic(size, d, timeout=None):
    """Exhaustively confirm L(K_size) has no d-colouring with two adjacent edges coloured apart."""
    k = Graph.complete(size)
    lk, edge_list = line_graph(k)
    index = {e: i for i, e in enumerate(edge_list)}
    pc = PartialColouring.from_sets(lk.n, [index[(0, 1)]], [index[(0, 2)]])
    return oracle_solve(lk, d, pc=pc, guard=False, timeout=timeout) is None


def validate_line_witness(gadget, ec, d):
    """Violations of the witness on G, plus those of its image on L(G)."""
    from ..colouring import validate_colouring

    problems = validate_edge_colouring(gadget.pre_graph, ec, d)
    red, blue = edge_colouring_to_vertex_masks(gadget, ec)
    reds = [i for i in range(gadget.graph.n) if red >> i & 1]
    blues = [i for i in range(gadget.graph.n) if blue >> i & 1]
    problems += [str(v) for v in validate_colouring(gadget.graph, reds, blues, d)]
    return problems
