"""
Seeded instance generators. Same arguments, same instance.
"""
from enum import Enum
from typing import Optional

import networkx as nx
import numpy as np

from src.errors import MalformedGraph
from src.instances import Graph
from src.relation_core import Relation


class Model(str, Enum):
    GNP = "gnp"
    DIGRAPH = "digraph"
    TOURNAMENT = "tournament"
    TRANSITIVE = "transitive"
    BIPARTITE = "bipartite"
    TWO_STRUCTURE = "2structure"


def _check(n: int, p: Optional[float] = None):
    if n < 1:
        raise MalformedGraph(f"n must be >= 1, got {n}")
    if p is not None and not 0.0 <= p <= 1.0:
        raise MalformedGraph(f"probability must lie in [0, 1], got {p}")


def gnp(n: int, p: float = 0.5, seed: int = 0) -> Graph:
    _check(n, p)
    g = nx.gnp_random_graph(n, p, seed=seed)
    return Graph.undirected(n, g.edges())


def random_digraph(n: int, p: float = 0.5, seed: int = 0) -> Graph:
    _check(n, p)
    g = nx.gnp_random_graph(n, p, seed=seed, directed=True)
    return Graph.directed(n, g.edges())


def tournament(n: int, seed: int = 0) -> Graph:
    _check(n)
    rng = np.random.default_rng(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Graph.directed(n, arcs)


def transitive_tournament(n: int) -> Graph:
    _check(n)
    return Graph.directed(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def bipartite(n: int, p: float = 0.5, seed: int = 0) -> Graph:
    """Black vertices are 0..ceil(n/2)-1, the rest are white."""
    _check(n, p)
    n_black = (n + 1) // 2
    g = nx.bipartite.random_graph(n_black, n - n_black, p, seed=seed)
    return Graph.bipartite(n, range(n_black), g.edges())


def two_structure(n: int, colors: int = 2, seed: int = 0, directed: bool = False) -> Graph:
    _check(n)
    if colors < 1:
        raise MalformedGraph(f"need at least one colour, got {colors}")
    rng = np.random.default_rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v and (directed or u < v)]
    drawn = rng.integers(0, colors, size=len(pairs))
    return Graph.two_structure(n, {pair: f"c{c}" for pair, c in zip(pairs, drawn)}, directed=directed)


def random_relation(n: int, seed: int = 0, max_classes: Optional[int] = None) -> Relation:
    """Each H_s is an independent random partition of V minus s into at most ``max_classes`` classes."""
    _check(n)
    rng = np.random.default_rng(seed)
    labels = np.empty((n, n), dtype=np.int64)
    for s in range(n):
        k = int(rng.integers(1, (max_classes or n) + 1))
        labels[s] = rng.integers(0, k, size=n)
    return Relation.from_labels(labels)


def generate(model: Model, n: int, p: float = 0.5, seed: int = 0, colors: int = 2, directed: bool = False) -> Graph:
    model = Model(model)
    if model == Model.GNP:
        return gnp(n, p, seed)
    if model == Model.DIGRAPH:
        return random_digraph(n, p, seed)
    if model == Model.TOURNAMENT:
        return tournament(n, seed)
    if model == Model.TRANSITIVE:
        return transitive_tournament(n)
    if model == Model.BIPARTITE:
        return bipartite(n, p, seed)
    return two_structure(n, colors, seed, directed)
