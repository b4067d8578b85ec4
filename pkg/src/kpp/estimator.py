"""scikit-learn style front end: ``KPathPartitioner().fit(graph).labels_``."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from .graph import Graph, GraphFormatError, parse_edge_list
from .pipeline import solve


def check_k(k) -> int:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise TypeError(f"k must be an integer, got {type(k).__name__}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return int(k)


def check_graph(X) -> Graph:
    """Accept a Graph, edge-list text, or a symmetric 0/1 adjacency matrix."""
    if isinstance(X, Graph):
        return X
    if isinstance(X, str):
        return parse_edge_list(X)
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise GraphFormatError(f"adjacency matrix must be square, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise GraphFormatError("adjacency matrix must be symmetric")
    if np.any(np.diag(arr) != 0):
        raise GraphFormatError("adjacency matrix has self-loops")
    us, vs = np.nonzero(np.triu(arr, 1))
    return Graph(arr.shape[0], zip(us.tolist(), vs.tolist()))


class KPathPartitioner(ClusterMixin, BaseEstimator):
    """Partition the vertices of a graph into few paths of at most ``k`` vertices.

    Parameters
    ----------
    k : int
        Maximum number of vertices per path.
    tier : {"auto", "exact", "heuristic"}
        How the triangle-free cover is computed.  ``auto`` uses the exact
        search up to ``exact_threshold`` vertices per component.
    exact_threshold : int or None
        Size cap for the exact tier; None reads ``KPP_EXACT_THRESHOLD`` or
        falls back to 14.
    """

    def __init__(self, k=9, tier="auto", exact_threshold=None):
        self.k = k
        self.tier = tier
        self.exact_threshold = exact_threshold

    def fit(self, X, y=None):
        k = check_k(self.k)
        if self.tier not in ("auto", "exact", "heuristic"):
            raise ValueError(f"unknown tier {self.tier!r}")
        g = check_graph(X)
        report = solve(g, k, self.tier, self.exact_threshold)
        self.graph_ = g
        self.report_ = report
        self.paths_ = report.partition.canonical()
        labels = np.empty(g.n, dtype=int)
        for i, p in enumerate(self.paths_):
            labels[list(p)] = i
        self.labels_ = labels
        self.n_paths_ = len(self.paths_)
        self.n_edges_ = report.edges
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_
