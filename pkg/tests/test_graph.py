import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import corpus, corpus_upto
from dcut import GraphFormatError
from dcut.domination import dominates, find_dominating_clique_or_c5, min_dominating_set
from dcut.exceptions import DominatingStructureNotFound
from dcut.graph import (
    INF,
    Graph,
    connected_components,
    diameter,
    distances,
    induced_subgraph,
    is_connected,
    line_graph,
    radius,
)
from dcut.io import emit_graph6, parse_edge_list, parse_graph6
from dcut.patterns import find_induced, is_free, iter_induced, pattern_graph


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


def to_nx(g):
    return g.to_networkx()


# graph6 ---------------------------------------------------------------------


def test_graph6_matches_networkx_reference_decoder():
    rng = random.Random(0)
    strings = []
    for n in list(range(1, 70)) + [100, 250]:
        for _ in range(2):
            h = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(10**6))
            strings.append(nx.to_graph6_bytes(h, header=False).decode().strip())
    assert len(strings) >= 100
    for s in strings:
        ref = nx.from_graph6_bytes(s.encode())
        g = parse_graph6(s)
        assert g.n == ref.number_of_nodes()
        assert set(g.edges()) == {tuple(sorted(e)) for e in ref.edges()}
        assert emit_graph6(g) == s


def test_graph6_five_vertex_example():
    g = parse_graph6("D?{")
    ref = nx.from_graph6_bytes(b"D?{")
    assert g.n == 5 and set(g.edges()) == {tuple(sorted(e)) for e in ref.edges()}


def test_graph6_k1_and_c4():
    assert parse_graph6(emit_graph6(Graph(1))) == Graph(1)
    assert emit_graph6(Graph(1)) == "@"
    s = emit_graph6(Graph.cycle(4))
    assert len(s) == 2 and parse_graph6(s) == Graph.cycle(4)


def test_graph6_header_and_long_form():
    g = Graph.path(70)
    s = emit_graph6(g, header=True)
    assert s.startswith(">>graph6<<~")
    assert parse_graph6(s) == g


@pytest.mark.parametrize(
    "text, fragment",
    [("", "empty"), ("D?", "truncated bit stream"), ("D?{A", "trailing"), ("D\x10{", "outside"), ("~?", "truncated")],
)
def test_graph6_errors_carry_offsets(text, fragment):
    with pytest.raises(GraphFormatError, match=fragment) as info:
        parse_graph6(text)
    if text:
        assert info.value.offset is not None


def test_graph6_rejects_padding_bits():
    with pytest.raises(GraphFormatError, match="padding"):
        parse_graph6("B@")  # 3 vertices -> 3 data bits, the low three must be 0
    parse_graph6("Bw")


@given(graphs(max_n=40))
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_graph6_round_trip_large():
    rng = random.Random(3)
    for n in (63, 200, 1000):
        g = Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 3 / n])
        assert parse_graph6(emit_graph6(g)) == g


def test_edge_list_parsing():
    g = parse_edge_list("# square\n4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert g == Graph.cycle(4)
    with pytest.raises(GraphFormatError, match="announces"):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 1\n0 0\n")


# metrics --------------------------------------------------------------------


def test_distances_examples():
    dist = distances(Graph.path(4))
    assert dist[0, 3] == 3
    c5 = distances(Graph.cycle(5))
    assert {c5[i, j] for i in range(5) for j in range(5) if i != j} == {1, 2}
    two = distances(Graph(2))
    assert two[0, 1] == INF and two[0, 0] == 0


@pytest.mark.parametrize("g, diam, rad", [(Graph.path(4), 3, 2), (Graph.cycle(5), 2, 2), (Graph.complete(4), 1, 1)])
def test_diameter_radius(g, diam, rad):
    assert diameter(g) == diam and radius(g) == rad


def test_disconnected_diameter_is_infinite():
    assert diameter(Graph(3, [(0, 1)])) == INF


@given(graphs(max_n=10))
def test_distances_match_networkx(g):
    dist = distances(g)
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    for u in range(g.n):
        for v in range(g.n):
            assert dist[u, v] == ref[u].get(v, INF)
    if g.n >= 1 and is_connected(g):
        assert radius(g) <= diameter(g) <= 2 * radius(g)


def test_components():
    assert connected_components(Graph.cycle(5)) == [[0, 1, 2, 3, 4]]
    assert connected_components(Graph(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]
    assert connected_components(Graph(3)) == [[0], [1], [2]]


def test_induced_subgraph():
    sub, index = induced_subgraph(Graph.complete(4), [3, 0, 2])
    assert sub == Graph.complete(3) and index == [0, 2, 3]
    sub, _ = induced_subgraph(Graph.cycle(5), [1, 2])
    assert sub == Graph.path(2)
    assert induced_subgraph(Graph.cycle(5), [])[0].n == 0
    with pytest.raises(ValueError):
        induced_subgraph(Graph.cycle(5), [7])


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


# line graphs ----------------------------------------------------------------


def test_line_graph_examples():
    assert line_graph(Graph.path(3))[0] == Graph.path(2)
    assert line_graph(Graph.star(3))[0] == Graph.complete(3)
    lc5, edges = line_graph(Graph.cycle(5))
    assert nx.is_isomorphic(to_nx(lc5), nx.cycle_graph(5))
    assert edges == sorted(edges)


@given(graphs(max_n=10))
def test_line_graph_degrees(g):
    lg, edges = line_graph(g)
    assert lg.n == g.m
    for i, (u, v) in enumerate(edges):
        assert lg.degree(i) == g.degree(u) + g.degree(v) - 2
    assert nx.is_isomorphic(to_nx(lg), nx.line_graph(to_nx(g)))


# patterns -------------------------------------------------------------------


def test_find_induced_examples():
    assert find_induced(Graph.cycle(5), "P5") is None
    path = find_induced(Graph.path(5), "P5")
    assert sorted(path) == [0, 1, 2, 3, 4]
    claw = find_induced(Graph.star(4), "claw")
    assert claw is not None and 0 in claw


def test_pattern_names():
    assert pattern_graph("P3+P4").n == 7 and pattern_graph("P3+P4").m == 5
    assert pattern_graph("3P2").m == 3
    assert pattern_graph("P5+2P1").n == 7
    with pytest.raises(ValueError):
        pattern_graph("P8")
    with pytest.raises(ValueError):
        pattern_graph("Q3")


def _brute_force_free(g, h):
    hn = to_nx(h)
    for sub in combinations(range(g.n), h.n):
        s, _ = induced_subgraph(g, sub)
        if s.m == h.m and nx.is_isomorphic(to_nx(s), hn):
            return False
    return True


@pytest.mark.parametrize("name", ["P5", "P3+P4", "3P2", "K1,3", "C5", "P5+P1"])
def test_find_induced_agrees_with_brute_force(name):
    h = pattern_graph(name)
    rng = random.Random(name)
    sample = list(corpus_upto(7)) + rng.sample(corpus(8), 400)
    for g in sample:
        found = find_induced(g, name)
        assert (found is None) == _brute_force_free(g, h)
        if found is not None:
            s, _ = induced_subgraph(g, found)
            # image of pattern vertex i is found[i]: adjacency must match exactly
            for i, j in combinations(range(h.n), 2):
                assert h.has_edge(i, j) == g.has_edge(found[i], found[j])


def test_iter_induced_counts_copies():
    assert len(list(iter_induced(Graph.cycle(5), "P4"))) == 5
    assert len(list(iter_induced(Graph.complete(5), "C3"))) == 10


def test_is_free_within_mask():
    g = Graph.path(6)
    assert not is_free(g, "P5")
    assert is_free(g, "P5", within=0b011111 & ~0b100)


# domination -----------------------------------------------------------------


def test_min_dominating_set_examples():
    assert min_dominating_set(Graph.star(5), 3) == {0}
    c6 = min_dominating_set(Graph.cycle(6), 3)
    assert len(c6) == 2 and dominates(Graph.cycle(6), c6)
    assert min_dominating_set(Graph.path(7), 2) is None


def test_min_dominating_set_is_minimum():
    for g in corpus_upto(7):
        dom = min_dominating_set(g, g.n)
        assert dominates(g, dom)
        smaller = len(dom) - 1
        assert all(not dominates(g, s) for s in combinations(range(g.n), smaller)) if smaller else True


def test_dominating_clique_or_c5_examples():
    assert find_dominating_clique_or_c5(Graph.cycle(5)) == (frozenset(range(5)), "c5")
    assert find_dominating_clique_or_c5(Graph.star(4)) == (frozenset({0}), "clique")
    split = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    dom, kind = find_dominating_clique_or_c5(split)
    assert kind == "clique" and dom in ({0}, {1}, {0, 1})


def test_dominating_structure_on_every_small_p5_free_graph():
    for g in corpus_upto(8):
        if not is_free(g, "P5"):
            continue
        for prefer in ("smallest", "largest"):
            dom, kind = find_dominating_clique_or_c5(g, prefer=prefer)
            assert dominates(g, dom)
            sub, _ = induced_subgraph(g, dom)
            if kind == "clique":
                assert sub.m == len(dom) * (len(dom) - 1) // 2
            else:
                assert nx.is_isomorphic(to_nx(sub), nx.cycle_graph(5))


def test_dominating_structure_missing_for_long_path():
    with pytest.raises(DominatingStructureNotFound):
        find_dominating_clique_or_c5(Graph.path(7))
