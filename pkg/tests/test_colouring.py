import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import corpus_upto
from dcut import (
    DCutCertificate,
    Graph,
    PartialColouring,
    colour_process,
    colouring_from_cut,
    cut_from_colouring,
    edge_oracle_solve,
    extend_budgeted,
    line_graph,
    oracle_solve,
    validate_colouring,
    validate_edge_colouring,
)
from dcut.colouring import Stats, is_d_colouring
from dcut.config import pruning_disabled
from dcut.exceptions import OracleGuardExceeded, OracleTimeout
from dcut.graph import is_connected, mask_of
from dcut.io import certificate_from_json, certificate_to_json
from dcut.oracle import brute_force_solve

C4 = Graph.cycle(4)


def test_validate_examples():
    assert validate_colouring(C4, {0, 1}, {2, 3}, 1) == []
    (v,) = validate_colouring(Graph.complete(3), {0}, {1, 2}, 1)
    assert v.vertex == 0 and v.count == 2
    (missing,) = validate_colouring(Graph.path(3), {0, 1, 2}, set(), 2)
    assert "blue" in str(missing)


def test_validate_requires_partition():
    with pytest.raises(ValueError, match="partition"):
        validate_colouring(C4, {0}, {1}, 1)
    with pytest.raises(ValueError, match="both"):
        validate_colouring(C4, {0, 1}, {1, 2, 3}, 1)


def test_cut_examples():
    cert = cut_from_colouring(C4, {0, 1}, {2, 3}, 1)
    assert set(cert.cut_edges) == {(1, 2), (0, 3)}
    assert cut_from_colouring(Graph.path(2), {0}, {1}, 1).cut_edges == ((0, 1),)
    with pytest.raises(ValueError):
        cut_from_colouring(Graph.complete(3), {0}, {1, 2}, 1)


def test_colouring_from_cut_rejects_non_cuts():
    with pytest.raises(ValueError):
        colouring_from_cut(C4, [(0, 1)], 1)


def test_cut_round_trip_random():
    rng = random.Random(11)
    graphs = [g for g in corpus_upto(7, 2)]
    done = 0
    while done < 500:
        g = rng.choice(graphs)
        d = rng.randint(1, 3)
        red = {v for v in range(g.n) if rng.random() < 0.5}
        blue = set(range(g.n)) - red
        if validate_colouring(g, red, blue, d):
            continue
        if not (is_connected(g, mask_of(red)) and is_connected(g, mask_of(blue))):
            # removing the cut must leave exactly the two sides
            continue
        cert = cut_from_colouring(g, red, blue, d)
        back = colouring_from_cut(g, cert.cut_edges, d)
        assert set(back) in ({frozenset(red), frozenset(blue)},)
        done += 1


def test_certificate_json_round_trip():
    cert = cut_from_colouring(C4, {0, 1}, {2, 3}, 1)
    assert certificate_from_json(certificate_to_json(cert)) == cert
    assert cert.swapped().swapped() == cert


# colour-processing ------------------------------------------------------------


def test_colour_process_forces_centre():
    d = 2
    g = Graph.star(5)
    pc = PartialColouring.from_sets(g.n, red={1, 2, 3})
    out = colour_process(g, pc, d)
    assert 0 in out.red and out.uncoloured == {4, 5}


def test_colour_process_detects_conflict():
    g = Graph.star(6)
    pc = PartialColouring.from_sets(g.n, red={1, 2, 3}, blue={4, 5, 6})
    assert colour_process(g, pc, 2) is None


def test_colour_process_fixpoint():
    g = Graph.cycle(6)
    pc = PartialColouring.from_sets(g.n, red={0}, blue={3})
    assert pc.is_colour_processed(g, 1)
    assert colour_process(g, pc, 1) == pc


def _random_precolouring(rng, g):
    red, blue = set(), set()
    for v in range(g.n):
        r = rng.random()
        if r < 0.25:
            red.add(v)
        elif r < 0.5:
            blue.add(v)
    return PartialColouring.from_sets(g.n, red, blue)


@st.composite
def precoloured(draw):
    n = draw(st.integers(2, 9))
    edges = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])))
    g = Graph(n, edges)
    colours = draw(st.lists(st.sampled_from((0, 1, None)), min_size=n, max_size=n))
    pc = PartialColouring.from_sets(n, [v for v, c in enumerate(colours) if c == 0],
                                    [v for v, c in enumerate(colours) if c == 1])
    return g, pc, draw(st.integers(1, 3))


@given(precoloured())
def test_colour_process_is_confluent_and_processed(case):
    g, pc, d = case
    up = colour_process(g, pc, d, "ascending")
    down = colour_process(g, pc, d, "descending")
    assert up == down
    if up is not None:
        assert up.is_colour_processed(g, d)
        assert pc.red <= up.red and pc.blue <= up.blue


@given(precoloured())
def test_colour_process_preserves_extensions(case):
    g, pc, d = case
    before = brute_force_solve(g, d, pc) is not None
    out = colour_process(g, pc, d)
    if out is None:
        assert not before
    else:
        assert before == (brute_force_solve(g, d, out) is not None)


# budgeted branching -----------------------------------------------------------


def test_extend_budgeted_empty_frontier():
    g = Graph.star(4)
    pc = PartialColouring.from_sets(g.n, red={1, 2})
    assert list(extend_budgeted(g, pc, [], 1)) == [colour_process(g, pc, 1)]


def test_extend_budgeted_p3_leaves():
    g = Graph.path(3)
    pc = PartialColouring.from_sets(3, red={1})
    states = {(s.red, s.blue) for s in extend_budgeted(g, pc, [0, 2], 1)}
    # both leaves blue would give the middle vertex 2 blue neighbours
    expected = set()
    for c0, c2 in product((0, 1), repeat=2):
        red = {1} | {v for v, c in ((0, c0), (2, c2)) if c == 0}
        blue = {0, 1, 2} - red
        if (g.bits[1] & mask_of(blue)).bit_count() <= 1:
            expected.add((frozenset(red), frozenset(blue)))
    assert states == expected


def test_extend_budgeted_infeasible_start():
    g = Graph.star(6)
    pc = PartialColouring.from_sets(g.n, red={1, 2, 3}, blue={4, 5, 6})
    assert list(extend_budgeted(g, pc, [0], 2)) == []


def test_extend_budgeted_rejects_coloured_frontier():
    with pytest.raises(ValueError):
        list(extend_budgeted(C4, PartialColouring.from_sets(4, red={0}), [0], 1))


def test_extend_budgeted_is_complete():
    rng = random.Random(5)
    graphs = list(corpus_upto(7, 3))
    for _ in range(300):
        g = rng.choice(graphs)
        d = rng.randint(1, 2)
        pc = _random_precolouring(rng, g)
        frontier = [v for v in pc.uncoloured if rng.random() < 0.5]
        states = list(extend_budgeted(g, pc, frontier, d))
        for red_bits in range(1 << g.n):
            red = {v for v in range(g.n) if red_bits >> v & 1}
            blue = set(range(g.n)) - red
            if not (pc.red <= red and pc.blue <= blue) or validate_colouring(g, red, blue, d):
                continue
            assert any(s.red <= red and s.blue <= blue for s in states)


# oracle -----------------------------------------------------------------------


@pytest.mark.parametrize("d", [1, 2, 3])
def test_oracle_complete_graph_bound(d):
    assert oracle_solve(Graph.complete(2 * d + 1), d) is None
    assert oracle_solve(Graph.complete(2 * d + 2), d) is None
    assert oracle_solve(Graph.complete(2 * d), d) is not None


def test_oracle_examples():
    cert = oracle_solve(Graph.complete(4), 2)
    assert len(cert.red) == len(cert.blue) == 2
    assert oracle_solve(Graph.complete(6), 2) is None


def test_oracle_matches_brute_force():
    for g in corpus_upto(6, 2):
        for d in (1, 2):
            cert = oracle_solve(g, d)
            assert (cert is None) == (brute_force_solve(g, d) is None)
            if cert is not None:
                assert validate_colouring(g, cert.red, cert.blue, d) == []


def test_oracle_extends_precolouring():
    g = Graph.cycle(6)
    pc = PartialColouring.from_sets(6, red={0}, blue={1})
    cert = oracle_solve(g, 1, pc)
    assert 0 in cert.red and 1 in cert.blue


def test_oracle_decision_unchanged_without_pruning():
    for g in corpus_upto(6, 2):
        with pruning_disabled("budget", "saturation"):
            a = oracle_solve(g, 1) is not None
        assert a == (oracle_solve(g, 1) is not None)


def test_oracle_guard_and_timeout(monkeypatch):
    with pytest.raises(OracleGuardExceeded):
        oracle_solve(Graph.path(30), 2)
    monkeypatch.setenv("DCUT_ORACLE_GUARD", "40")
    assert oracle_solve(Graph.path(30), 2) is not None
    with pytest.raises(OracleTimeout):
        oracle_solve(Graph.complete(60), 10, guard=False, timeout=0.0)


def test_oracle_stats():
    stats = Stats()
    oracle_solve(Graph.cycle(7), 1, stats=stats)
    assert stats.propagation_calls > 0
    assert set(stats.to_json()) >= {"branches_by_phase", "propagation_calls", "wall_time_ms"}


def test_monotone_in_d():
    for g in corpus_upto(7, 2):
        if oracle_solve(g, 1) is not None:
            assert oracle_solve(g, 2) is not None


# edge colourings ----------------------------------------------------------------


def test_edge_oracle_examples():
    ec = edge_oracle_solve(Graph.path(3), 1)
    assert ec is not None and validate_edge_colouring(Graph.path(3), ec, 1) == []
    assert edge_oracle_solve(Graph.star(3), 1) is None


def test_validate_edge_colouring_reports():
    g = Graph.star(3)
    bad = validate_edge_colouring(g, {(0, 1): "red", (0, 2): "blue", (0, 3): "blue"}, 1)
    assert bad and "adjacent to 2" in bad[0]
    with pytest.raises(ValueError):
        validate_edge_colouring(g, {(0, 1): "red"}, 1)


def test_edge_oracle_matches_line_graph_small():
    for g in corpus_upto(6, 2):
        if g.m > 7:
            continue
        for d in (1, 2):
            ec = edge_oracle_solve(g, d)
            assert (ec is None) == (oracle_solve(line_graph(g)[0], d) is None)
            if ec is not None:
                assert validate_edge_colouring(g, ec, d) == []


def test_certificate_dataclass_labels():
    cert = DCutCertificate(frozenset({0}), frozenset({1, 2}), ((0, 1),), 1)
    assert cert.labels(3) == [0, 1, 1]
    assert is_d_colouring(Graph.path(3), 0b001, 0b110, 1)
