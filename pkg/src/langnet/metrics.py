"""Centrality measurements on co-occurrence graphs."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import CoocGraph

__all__ = [
    "PageRankParams",
    "MetricsReport",
    "MEASURES",
    "degree",
    "pagerank",
    "betweenness",
    "compute_report",
]

log = logging.getLogger(__name__)

MEASURES = ("degree", "pagerank", "betweenness")


@dataclass(frozen=True)
class PageRankParams:
    damping: float = 0.85
    tolerance: float = 1e-10
    max_iterations: int = 200

    def __post_init__(self):
        if not 0.0 <= self.damping < 1.0:
            raise ValueError(f"damping must be in [0, 1), got {self.damping}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be positive, got {self.max_iterations}")


@dataclass(frozen=True)
class MetricsReport:
    """Per-node measurements keyed by word label, in node order."""

    degree: dict
    pagerank: dict
    betweenness: dict
    node_count: int
    edge_count: int

    def measure(self, name: str) -> dict:
        if name not in MEASURES:
            raise ValueError(f"unknown measure {name!r}; choose from {MEASURES}")
        return getattr(self, name)

    def to_dict(self) -> dict:
        return {
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "degree": dict(sorted(self.degree.items())),
            "pagerank": dict(sorted(self.pagerank.items())),
            "betweenness": dict(sorted(self.betweenness.items())),
        }


def degree(graph: CoocGraph) -> dict:
    return {label: len(nbrs) for label, nbrs in zip(graph.labels, graph.adjacency)}


def _pagerank_vector(graph: CoocGraph, params: PageRankParams) -> np.ndarray:
    n = graph.node_count
    if n == 0:
        raise ValueError("PageRank is undefined on an empty graph")
    edges = np.array(graph.sorted_edges, dtype=np.int64).reshape(-1, 2)
    # walk each undirected edge in both directions
    src = np.concatenate([edges[:, 0], edges[:, 1]])
    dst = np.concatenate([edges[:, 1], edges[:, 0]])
    out_degree = np.bincount(src, minlength=n).astype(float)
    dangling = out_degree == 0
    inv_degree = np.divide(1.0, out_degree, out=np.zeros(n), where=~dangling)

    d = params.damping
    x = np.full(n, 1.0 / n)
    for it in range(1, params.max_iterations + 1):
        flow = np.bincount(dst, weights=(x * inv_degree)[src], minlength=n)
        # dangling nodes spread their mass uniformly, like teleportation
        new = d * flow + (d * x[dangling].sum() + (1.0 - d)) / n
        change = np.abs(new - x).sum()
        x = new
        if change < params.tolerance:
            break
    else:
        log.warning("PageRank stopped after %d iterations (L1 change %.3g)", it, change)
    return x / x.sum()


def pagerank(graph: CoocGraph, params: PageRankParams | None = None) -> dict:
    x = _pagerank_vector(graph, params or PageRankParams())
    return {label: float(v) for label, v in zip(graph.labels, x)}


def _brandes(adj) -> list:
    n = len(adj)
    score = [0.0] * n
    for s in range(n):
        order = []
        preds = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s] = 1
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                score[w] += delta[w]
    # every unordered pair was visited from both ends
    return [c / 2.0 for c in score]


def betweenness(graph: CoocGraph) -> dict:
    """Unnormalized shortest-path betweenness (Brandes), each pair counted once."""
    return dict(zip(graph.labels, _brandes(graph.adjacency)))


def compute_report(graph: CoocGraph, params: PageRankParams | None = None) -> MetricsReport:
    if graph.node_count == 0:
        raise ValueError("cannot compute a report for an empty graph")
    return MetricsReport(
        degree=degree(graph),
        pagerank=pagerank(graph, params),
        betweenness=betweenness(graph),
        node_count=graph.node_count,
        edge_count=graph.edge_count,
    )
