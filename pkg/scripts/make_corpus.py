"""Write tests/data/connected{n}.g6: all connected graphs on n vertices up to isomorphism.

n <= 7 comes from the networkx graph atlas; n = 8 is grown from the 7-vertex
graphs by adding a vertex in every possible way and removing isomorphic
duplicates.  nauty's ``geng -c n`` produces equivalent files.
"""
import sys
from collections import defaultdict
from itertools import combinations
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
from dcut.graph import Graph  # noqa: E402
from dcut.io import write_graph6_file  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "tests" / "data"
EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def to_graph(h):
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), h.edges())


def atlas(n):
    return [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)]


def grow(smaller):
    buckets = defaultdict(list)
    n = smaller[0].number_of_nodes() + 1
    for h in smaller:
        for k in range(1, n):
            for nbrs in combinations(range(n - 1), k):
                g = h.copy()
                g.add_node(n - 1)
                g.add_edges_from((n - 1, u) for u in nbrs)
                key = (
                    tuple(sorted(d for _, d in g.degree())),
                    nx.weisfeiler_lehman_graph_hash(g, iterations=3),
                )
                bucket = buckets[key]
                if not any(nx.is_isomorphic(g, other) for other in bucket):
                    bucket.append(g)
    return [g for bucket in buckets.values() for g in bucket]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    seven = None
    for n in range(1, 9):
        graphs = atlas(n) if n <= 7 else grow(seven)
        if n == 7:
            seven = graphs
        assert len(graphs) == EXPECTED[n], (n, len(graphs))
        ordered = sorted(graphs, key=lambda h: (h.number_of_edges(), sorted(d for _, d in h.degree())))
        write_graph6_file(OUT / f"connected{n}.g6", [to_graph(h) for h in ordered])
        print(n, len(graphs))


if __name__ == "__main__":
    main()
