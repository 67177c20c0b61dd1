"""scikit-learn style wrappers: a coloring is a labelling of the vertices.

``fit(X)`` colours the graph ``X`` and stores the result; ``fit_predict(X)``
returns the colours as an array aligned with the sorted vertex ids. ``X``
may be a :class:`Graph`, a networkx graph, a square 0/1 adjacency matrix or
an iterable of edges (numpy arrays are always read as adjacency matrices).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from .budget import BudgetMode, color_apex, color_degenerate, color_no_kt
from .core import chi_d, solve_exact, verify_dynamic
from .exceptions import InternalError, NotColorable, PreconditionError
from .graph import Graph
from .k5free import color_k5free


def check_graph(X) -> Graph:
    """Coerce supported graph inputs to a :class:`Graph`."""
    if isinstance(X, Graph):
        return X
    if hasattr(X, "adj") and hasattr(X, "nodes"):
        return Graph.from_networkx(X)
    if isinstance(X, np.ndarray):
        A = X
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise PreconditionError(f"adjacency matrix must be square, got shape {A.shape}")
        if not np.array_equal(A, A.T):
            raise PreconditionError("adjacency matrix must be symmetric")
        if np.any(np.diag(A) != 0):
            raise PreconditionError("adjacency matrix must have a zero diagonal")
        if not np.isin(A, (0, 1)).all():
            raise PreconditionError("adjacency matrix entries must be 0 or 1")
        rows, cols = np.nonzero(np.triu(A, 1))
        return Graph(range(A.shape[0]), zip(rows.tolist(), cols.tolist()))
    try:
        edges = [tuple(int(v) for v in e) for e in X]
    except TypeError:
        raise PreconditionError(f"cannot interpret {type(X).__name__} as a graph") from None
    if any(len(e) != 2 for e in edges):
        raise PreconditionError("edges must be pairs")
    return Graph((v for e in edges for v in e), edges)


class _DynamicColorer(ClusterMixin, BaseEstimator):
    def _color(self, g: Graph):
        raise NotImplementedError

    def fit(self, X, y=None):
        g = check_graph(X)
        coloring, trace = self._color(g)
        report = verify_dynamic(g, coloring)
        if not report.ok:
            raise InternalError(f"coloring failed verification: {report.summary()}")
        self.graph_ = g
        self.coloring_ = coloring
        self.trace_ = trace
        self.vertices_ = np.array(g.sorted_vertices(), dtype=int)
        self.labels_ = np.array([coloring[v] for v in g.sorted_vertices()], dtype=int)
        self.n_colors_ = coloring.num_colors
        return self

    def predict(self, X=None):
        """Colours of the fitted graph (``X``, if given, must be that graph)."""
        check_is_fitted(self, "labels_")
        if X is not None and check_graph(X) != self.graph_:
            raise PreconditionError("predict only labels the graph passed to fit")
        return self.labels_


class ExactDynamicColorer(_DynamicColorer):
    """Dynamic coloring with ``k`` colours, or with chi_d colours when ``k`` is None."""

    def __init__(self, k: int | None = None, time_limit: float | None = None):
        self.k = k
        self.time_limit = time_limit

    def _color(self, g):
        k = chi_d(g, time_limit=self.time_limit) if self.k is None else self.k
        c = solve_exact(g, k, time_limit=self.time_limit)
        if c is None:
            raise NotColorable(f"no dynamic {k}-coloring exists")
        return c, None


class K5FreeDynamicColorer(_DynamicColorer):
    """Dynamic 4-coloring of a connected K5-minor-free graph other than C5."""

    def __init__(self, check_minor: bool = True, time_limit: float | None = None):
        self.check_minor = check_minor
        self.time_limit = time_limit

    def _color(self, g):
        result = color_k5free(g, check_minor=self.check_minor, time_limit=self.time_limit)
        return result.coloring, result.trace


class DegeneracyDynamicColorer(_DynamicColorer):
    """Dynamic (k+3)-coloring by minimum-degree peeling."""

    def __init__(self, k: int = 2):
        self.k = k

    def _color(self, g):
        return color_degenerate(g, self.k), None


class ApexDynamicColorer(_DynamicColorer):
    """Dynamic (|X|+4)-coloring of a graph that is planar once ``apex_set`` is removed."""

    def __init__(self, apex_set=()):
        self.apex_set = apex_set

    def _color(self, g):
        report = color_apex(g, self.apex_set)
        return report.coloring, report


class BudgetDynamicColorer(_DynamicColorer):
    """Coloring within the budget for graphs with no K_t (topological) minor."""

    def __init__(self, mode: str = "minor", t: int = 5):
        self.mode = mode
        self.t = t

    def _color(self, g):
        return color_no_kt(g, BudgetMode(self.mode, self.t)), None


__all__ = [
    "ApexDynamicColorer",
    "BudgetDynamicColorer",
    "DegeneracyDynamicColorer",
    "ExactDynamicColorer",
    "K5FreeDynamicColorer",
    "check_graph",
]
