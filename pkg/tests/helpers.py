import random

from langnet.graph import CoocGraph, Vocabulary


def make_graph(n, edges, labels=None):
    labels = labels or [f"w{i}" for i in range(n)]
    return CoocGraph(Vocabulary(tuple(labels)), frozenset(edges))


def random_connected_edges(rng: random.Random, n: int, p: float = 0.4):
    """A random spanning tree plus extra random edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return edges
