"""Exhaustive reference solvers.

``oracle_solve`` is the complete search everything else is checked against:
branch on one uncoloured vertex at a time, propagate after every assignment.
``brute_force_solve`` enumerates every completion with no pruning at all and
is only meant for tiny inputs.  ``edge_oracle_solve`` searches red-blue edge
colourings directly on the edges of G, never building the line graph.
"""
import time
from itertools import product

from . import config
from .colouring import (
    BLUE,
    RED,
    PartialColouring,
    certificate_from_masks,
    is_d_colouring,
    pick_branch_vertex,
    propagate,
)
from .exceptions import OracleGuardExceeded, OracleTimeout
from .graph import iter_bits

_CLOCK_EVERY = 256


def _guard(size, guard):
    limit = config.oracle_guard() if guard is None else guard
    if limit is not False and size > limit:
        raise OracleGuardExceeded(size, limit)


def oracle_solve(g, d, pc=None, guard=None, timeout=None, stats=None):
    """A red-blue d-colouring of ``g`` extending ``pc`` as a certificate, or None.

    ``guard`` caps the vertex count (default from :func:`config.oracle_guard`;
    pass ``False`` to lift it).  ``timeout`` is in seconds and raises
    :class:`OracleTimeout` when exceeded.
    """
    _guard(g.n, guard)
    pc = pc or PartialColouring.empty(g.n)
    deadline = None if timeout is None else time.monotonic() + timeout
    found = _search(g, d, pc.red_mask, pc.blue_mask, deadline, stats)
    if found is None:
        return None
    red, blue = found
    if not is_d_colouring(g, red, blue, d):
        raise AssertionError("oracle produced an invalid colouring")
    return certificate_from_masks(g, red, blue, d)


def _search(g, d, red, blue, deadline, stats):
    full = g.full_mask
    start = propagate(g, red, blue, d, stats)
    if start is None:
        return None
    # colour swap symmetry: with nothing precoloured the first branch is red only
    symmetric = not red and not blue
    stack = [(start[0], start[1], None)]
    nodes = 0
    while stack:
        red, blue, fresh = stack.pop()
        if fresh is not None:
            state = propagate(g, red, blue, d, stats, seeds=g.closed_mask(fresh))
            if state is None:
                continue
            red, blue = state
        nodes += 1
        if deadline is not None and nodes % _CLOCK_EVERY == 0 and time.monotonic() > deadline:
            raise OracleTimeout(f"oracle exceeded its time budget after {nodes} nodes")
        free = full & ~(red | blue)
        if not free:
            if is_d_colouring(g, red, blue, d):
                return red, blue
            continue
        v = pick_branch_vertex(g, free, red | blue)
        bit = 1 << v
        if stats is not None:
            stats.branch("oracle", 1 if symmetric else 2)
        if symmetric:
            symmetric = False
            stack.append((red | bit, blue, v))
            continue
        # blue pushed first so red is explored first
        stack.append((red, blue | bit, v))
        stack.append((red | bit, blue, v))
    return None


def oracle_decides(g, d, **kwargs):
    return oracle_solve(g, d, **kwargs) is not None


def brute_force_solve(g, d, pc=None, limit=20):
    """Enumerate all completions of ``pc``; return ``(red, blue)`` sets of the first valid one."""
    pc = pc or PartialColouring.empty(g.n)
    free = list(iter_bits(pc.uncoloured_mask))
    if len(free) > limit:
        raise OracleGuardExceeded(len(free), limit)
    for choice in product((0, 1), repeat=len(free)):
        red, blue = pc.red_mask, pc.blue_mask
        for v, c in zip(free, choice):
            if c:
                blue |= 1 << v
            else:
                red |= 1 << v
        if is_d_colouring(g, red, blue, d):
            return frozenset(iter_bits(red)), frozenset(iter_bits(blue))
    return None


# ---------------------------------------------------------------------------
# red-blue edge colourings


def validate_edge_colouring(g, ec, d):
    """Violations of the red-blue edge d-colouring conditions (empty list if valid).

    ``ec`` maps each edge ``(u, v)`` with ``u < v`` to ``"red"`` or ``"blue"``.
    """
    edges = g.edges()
    keys = set(edges)
    out = []
    missing = keys - set(ec)
    extra = set(ec) - keys
    if missing or extra:
        raise ValueError(f"edge colouring does not match E(G): missing {sorted(missing)}, extra {sorted(extra)}")
    at = [{RED: 0, BLUE: 0} for _ in range(g.n)]
    for (u, v), c in ec.items():
        if c not in (RED, BLUE):
            raise ValueError(f"bad colour {c!r} on edge {(u, v)}")
        at[u][c] += 1
        at[v][c] += 1
    for (u, v), c in sorted(ec.items()):
        other = BLUE if c == RED else RED
        k = at[u][other] + at[v][other]
        if k > d:
            out.append(f"edge {u}-{v} ({c}) is adjacent to {k} {other} edges")
    used = set(ec.values())
    for c in (RED, BLUE):
        if c not in used:
            out.append(f"colour {c} is unused")
    return out


def edge_oracle_solve(g, d, guard=None, timeout=None):
    """A red-blue edge d-colouring of ``g`` as ``{(u, v): colour}``, or None.

    Backtracks over the edges in order, keeping red/blue incidence counts per
    vertex; an edge's opposite-colour neighbours are the opposite-coloured
    edges at its two endpoints.
    """
    edges = g.edges()
    if not edges:
        return None
    _guard(len(edges), guard)
    deadline = None if timeout is None else time.monotonic() + timeout
    m = len(edges)
    red_at = [0] * g.n
    blue_at = [0] * g.n
    colour = [None] * m
    # for each endpoint, the indices of edges incident to it
    incident = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    nodes = 0

    def opposite(i):
        u, v = edges[i]
        if colour[i] == 0:
            return blue_at[u] + blue_at[v]
        return red_at[u] + red_at[v]

    def ok_around(i):
        u, v = edges[i]
        for j in incident[u] + incident[v]:
            if colour[j] is not None and opposite(j) > d:
                return False
        return True

    def assign(i, c):
        u, v = edges[i]
        colour[i] = c
        counts = red_at if c == 0 else blue_at
        counts[u] += 1
        counts[v] += 1

    def unassign(i):
        u, v = edges[i]
        counts = red_at if colour[i] == 0 else blue_at
        counts[u] -= 1
        counts[v] -= 1
        colour[i] = None

    def rec(i, used_red, used_blue):
        nonlocal nodes
        nodes += 1
        if deadline is not None and nodes % _CLOCK_EVERY == 0 and time.monotonic() > deadline:
            raise OracleTimeout("edge oracle exceeded its time budget")
        if i == m:
            return used_red and used_blue
        choices = (0,) if i == 0 else (0, 1)
        for c in choices:
            assign(i, c)
            if ok_around(i) and rec(i + 1, used_red or c == 0, used_blue or c == 1):
                return True
            unassign(i)
        return False

    if not rec(0, False, False):
        return None
    return {e: (RED if c == 0 else BLUE) for e, c in zip(edges, colour)}
