"""scikit-learn style wrapper: a batch of graphs in, d-cut decisions out."""
import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .graph import Graph
from .io import parse_graph6
from .solvers import ALGORITHMS, solve


def check_graph(obj):
    """Coerce ``obj`` to a :class:`Graph`.

    Accepts a Graph, a graph6 string, a networkx graph with integer nodes
    ``0..n-1``, or an ``(n, edges)`` pair.
    """
    if isinstance(obj, Graph):
        return obj
    if isinstance(obj, (str, bytes)):
        return parse_graph6(obj)
    if hasattr(obj, "nodes") and hasattr(obj, "edges"):
        nodes = list(obj.nodes())
        if set(nodes) != set(range(len(nodes))):
            raise ValueError("networkx graphs must use nodes 0..n-1")
        return Graph(len(nodes), obj.edges())
    if isinstance(obj, tuple) and len(obj) == 2:
        n, edges = obj
        return Graph(int(n), edges)
    raise TypeError(f"cannot interpret {type(obj).__name__} as a graph")


def check_graphs(X):
    if isinstance(X, (str, bytes, Graph)):
        raise TypeError("expected a sequence of graphs, got a single graph")
    graphs = [check_graph(x) for x in X]
    if not graphs:
        raise ValueError("empty batch of graphs")
    return graphs


class DCutSolver(BaseEstimator):
    """Decide d-Cut for each graph in a batch.

    There is nothing to learn; ``fit`` only validates the parameters (and the
    batch, if one is given), so the object composes with sklearn tooling.
    ``predict`` returns 1 for graphs with a d-cut and 0 otherwise, and keeps
    the full outcomes in ``outcomes_``.
    """

    def __init__(self, d=2, algorithm="auto"):
        self.d = d
        self.algorithm = algorithm

    def _check_params(self):
        if not isinstance(self.d, (int, np.integer)) or isinstance(self.d, bool) or self.d < 1:
            raise ValueError(f"d must be a positive integer, got {self.d!r}")
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {sorted(ALGORITHMS)}, got {self.algorithm!r}")

    def fit(self, X=None, y=None):
        self._check_params()
        if X is not None:
            check_graphs(X)
        self.d_ = int(self.d)
        return self

    def solve(self, X):
        check_is_fitted(self, "d_")
        return [solve(g, self.d_, self.algorithm) for g in check_graphs(X)]

    def predict(self, X):
        self.outcomes_ = self.solve(X)
        return np.array([int(o.decision) for o in self.outcomes_], dtype=np.int64)

    def certificates(self, X):
        return [o.certificate for o in self.solve(X)]

    def score(self, X, y):
        """Fraction of graphs whose decision matches the 0/1 labels ``y``."""
        y = np.asarray(y, dtype=np.int64)
        pred = self.predict(X)
        if y.shape != pred.shape:
            raise ValueError(f"{len(pred)} graphs but {y.size} labels")
        return float(np.mean(pred == y))
