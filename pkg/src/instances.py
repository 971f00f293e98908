"""
Relations built from graphs, digraphs, 2-structures and bipartite graphs,
plus the edge-list format used to exchange them.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from src.errors import (BadK, ClosureViolation, DuplicateEdge, EmptySet, IncompleteColoring,
                        IndexOutOfRange, MalformedGraph, NotBipartite, ParseError)
from src.relation_core import ElementSet, Relation

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class GraphKind(str, Enum):
    UNDIRECTED = "undirected"
    DIRECTED = "directed"
    BIPARTITE = "bipartite"
    TWO_STRUCTURE = "2structure"


class PathMode(str, Enum):
    VERTEX = "vertex"
    NEIGHBORHOOD = "neighborhood"


@dataclass(frozen=True, eq=True)
class Graph:
    """
    Loop-free graph on vertices 0..n-1.

    Undirected edges are stored as (min, max). For 2-structures ``colors``
    maps every pair (ordered pairs when ``directed_colors``) to its colour
    and ``edges`` lists the coloured pairs.
    """

    n: int
    kind: GraphKind
    edges: Tuple[Edge, ...]
    black: Optional[FrozenSet[int]] = None
    colors: Optional[Mapping[Edge, str]] = field(default=None, hash=False)
    directed_colors: bool = False

    @property
    def is_symmetric(self) -> bool:
        return self.kind in (GraphKind.UNDIRECTED, GraphKind.BIPARTITE) or (
            self.kind == GraphKind.TWO_STRUCTURE and not self.directed_colors)

    @classmethod
    def undirected(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        return cls(n, GraphKind.UNDIRECTED, _normalize_edges(n, edges, symmetric=True))

    @classmethod
    def directed(cls, n: int, arcs: Iterable[Edge]) -> "Graph":
        return cls(n, GraphKind.DIRECTED, _normalize_edges(n, arcs, symmetric=False))

    @classmethod
    def bipartite(cls, n: int, black: Iterable[int], edges: Iterable[Edge]) -> "Graph":
        black = frozenset(black)
        for b in black:
            _check_index(b, n)
        normalized = _normalize_edges(n, edges, symmetric=True)
        for u, v in normalized:
            if (u in black) == (v in black):
                raise NotBipartite(f"edge {u} {v} joins two vertices of the same colour")
        return cls(n, GraphKind.BIPARTITE, normalized, black=black)

    @classmethod
    def two_structure(cls, n: int, colors: Mapping[Edge, str], directed: bool = False) -> "Graph":
        normalized: Dict[Edge, str] = {}
        for (u, v), color in colors.items():
            _check_index(u, n)
            _check_index(v, n)
            if u == v:
                raise MalformedGraph(f"self-loop on vertex {u}")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in normalized:
                raise DuplicateEdge(u, v)
            normalized[key] = str(color)
        expected = n * (n - 1) if directed else n * (n - 1) // 2
        if len(normalized) != expected:
            missing = next((u, v) for u in range(n) for v in range(n)
                           if u != v and (directed or u < v) and (u, v) not in normalized)
            raise IncompleteColoring(f"pair {missing[0]} {missing[1]} has no colour")
        ordered = dict(sorted(normalized.items()))
        return cls(n, GraphKind.TWO_STRUCTURE, tuple(ordered), colors=ordered, directed_colors=directed)

    def adjacency(self) -> np.ndarray:
        """Boolean adjacency matrix; symmetric unless the graph is directed."""
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            a[u, v] = True
            if self.is_symmetric:
                a[v, u] = True
        return a

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph() if self.is_symmetric else nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


def _check_index(x: int, n: int, line: Optional[int] = None):
    if not 0 <= x < n:
        raise IndexOutOfRange(x, n, line)


def _normalize_edges(n: int, edges: Iterable[Edge], symmetric: bool) -> Tuple[Edge, ...]:
    if n < 1:
        raise MalformedGraph(f"graph must have at least one vertex, got n={n}")
    seen = set()
    for u, v in edges:
        _check_index(u, n)
        _check_index(v, n)
        if u == v:
            raise MalformedGraph(f"self-loop on vertex {u}")
        key = (min(u, v), max(u, v)) if symmetric else (u, v)
        if key in seen:
            raise DuplicateEdge(u, v)
        seen.add(key)
    return tuple(sorted(seen))


def _require(g: Graph, *kinds: GraphKind):
    if g.kind not in kinds:
        allowed = ", ".join(k.value for k in kinds)
        raise MalformedGraph(f"expected a graph of kind {allowed}, got {g.kind.value}")


def from_undirected(g: Graph) -> Relation:
    """H(x|yz) iff x is adjacent to both y and z or to neither."""
    _require(g, GraphKind.UNDIRECTED, GraphKind.BIPARTITE)
    return Relation.from_labels(g.adjacency().astype(np.int64))


def from_directed(g: Graph) -> Relation:
    """H(x|yz) iff the arcs between x and y match the arcs between x and z in both directions."""
    _require(g, GraphKind.DIRECTED)
    a = g.adjacency().astype(np.int64)
    return Relation.from_labels(2 * a + a.T)


def from_two_structure(g: Graph) -> Relation:
    """H(x|yz) iff the edges xy and xz have the same colour."""
    _require(g, GraphKind.TWO_STRUCTURE)
    if g.colors is None:
        raise IncompleteColoring("2-structure carries no colours")
    palette = {c: i for i, c in enumerate(sorted(set(g.colors.values())))}
    c = np.full((g.n, g.n), -1, dtype=np.int64)
    for (u, v), color in g.colors.items():
        c[u, v] = palette[color]
        if not g.directed_colors:
            c[v, u] = palette[color]
    if g.directed_colors:
        # an ordered pair is seen through the colours of both directions
        return Relation.from_labels(c * len(palette) + c.T)
    return Relation.from_labels(c)


def two_structure_of(g: Graph) -> Graph:
    """The edge/non-edge colouring of an undirected graph."""
    _require(g, GraphKind.UNDIRECTED, GraphKind.BIPARTITE)
    edges = set(g.edges)
    colors = {(u, v): ("edge" if (u, v) in edges else "none")
              for u in range(g.n) for v in range(u + 1, g.n)}
    return Graph.two_structure(g.n, colors)


def distance_k_relation(g: Graph, k: int) -> Relation:
    """Two classes per element s: vertices within distance k of s, and the rest."""
    if k < 1:
        raise BadK(k)
    _require(g, GraphKind.UNDIRECTED, GraphKind.BIPARTITE)
    nxg = g.to_networkx()
    labels = np.ones((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        near = nx.single_source_shortest_path_length(nxg, s, cutoff=k)
        labels[s, list(near)] = 0
    return Relation.from_labels(labels)


def path_avoiding_relation(g: Graph, mode: Union[PathMode, str] = PathMode.VERTEX) -> Relation:
    """
    H(s|xy) iff some path joins x and y avoiding s (VERTEX) or avoiding s and
    its whole neighbourhood (NEIGHBORHOOD). Neighbours of s are singleton
    classes of H_s in the second mode.
    """
    mode = PathMode(mode)
    _require(g, GraphKind.UNDIRECTED, GraphKind.BIPARTITE)
    nxg = g.to_networkx()
    labels = np.zeros((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        removed = {s}
        if mode == PathMode.NEIGHBORHOOD:
            removed |= set(nxg.neighbors(s))
        label = 0
        for component in nx.connected_components(nxg.subgraph(set(range(g.n)) - removed)):
            labels[s, list(component)] = label
            label += 1
        for v in sorted(removed - {s}):
            labels[s, v] = label
            label += 1
    return Relation.from_labels(labels)


class BimoduleInstance:
    """
    Bimodules of a bipartite graph: no outside black vertex distinguishes two
    white members and no outside white vertex distinguishes two black members.

    This family is not the homogeneous-set family of a ternary relation, so
    the instance exposes the splitter predicate and a maximal-set generator
    for the strong-set pipeline instead.
    """

    def __init__(self, g: Graph):
        if g.kind != GraphKind.BIPARTITE or g.black is None:
            raise NotBipartite(f"expected a bipartite graph, got {g.kind.value}")
        self.graph = g
        self.n = g.n
        self.adjacency = g.adjacency()
        self.black = np.zeros(g.n, dtype=bool)
        self.black[list(g.black)] = True

    def __repr__(self) -> str:
        return f"BimoduleInstance(n={self.n}, black={sorted(self.graph.black)})"

    def splitters(self, X: ElementSet) -> ElementSet:
        if not X:
            raise EmptySet("X")
        cols = np.fromiter(X, dtype=np.intp)
        split = np.zeros(self.n, dtype=bool)
        for same_colour, outside_colour in ((~self.black[cols], self.black), (self.black[cols], ~self.black)):
            members = cols[same_colour]
            if members.size >= 2:
                block = self.adjacency[:, members]
                split |= block.any(axis=1) & ~block.all(axis=1) & outside_colour
        split[cols] = False
        return frozenset(np.flatnonzero(split).tolist())

    def is_homogeneous_set(self, X: ElementSet) -> bool:
        return not self.splitters(X)

    def smallest_bimodule(self, S: Iterable[int], avoid: Optional[int] = None) -> ElementSet:
        """Close S under its splitters; stops early once ``avoid`` is absorbed."""
        current = frozenset(S)
        if not current:
            raise EmptySet("S")
        while True:
            outside = self.splitters(current)
            if not outside:
                return current
            current |= outside
            if avoid is not None and avoid in current:
                return current

    def _grow(self, x: int, y: int) -> ElementSet:
        grown = frozenset([x])
        changed = True
        while changed:
            changed = False
            for z in range(self.n):
                if z == y or z in grown:
                    continue
                candidate = self.smallest_bimodule(grown | {z}, avoid=y)
                if y not in candidate:
                    grown = candidate
                    changed = True
        return grown

    def maximal_sets_avoiding(self, y: int) -> List[ElementSet]:
        """
        Maximal bimodules not containing y. Two distinct maximal bimodules
        avoiding y that intersect prove the family is not closed under union
        of overlapping sets, which raises ClosureViolation.
        """
        found: List[ElementSet] = []
        covered: set = set()
        for x in range(self.n):
            if x == y or x in covered:
                continue
            grown = self._grow(x, y)
            for other in found:
                if not other.isdisjoint(grown):
                    raise ClosureViolation(other, grown)
            found.append(grown)
            covered |= grown
        return found


def from_bipartite_bimodular(g: Graph) -> BimoduleInstance:
    return BimoduleInstance(g)


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"expected an integer, got {token!r}")


def parse_graph(text: Union[bytes, str]) -> Graph:
    """
    Read the edge-list format::

        <n> <m> <kind> [directed]
        colors: <black ids>         (bipartite only)
        <u> <v> [<color>]           (m lines, colour for 2structure)
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(1, f"input is not UTF-8 text: {e}")

    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "missing header line")

    header_line, header = lines[0]
    tokens = header.split()
    if len(tokens) not in (3, 4):
        raise ParseError(header_line, "header must be '<n> <m> <kind>'")
    n = _parse_int(tokens[0], header_line)
    m = _parse_int(tokens[1], header_line)
    if n < 1 or m < 0:
        raise ParseError(header_line, f"invalid sizes n={n} m={m}")
    try:
        kind = GraphKind(tokens[2])
    except ValueError:
        raise ParseError(header_line, f"unknown graph kind {tokens[2]!r}")
    directed_colors = False
    if len(tokens) == 4:
        if kind != GraphKind.TWO_STRUCTURE or tokens[3] != "directed":
            raise ParseError(header_line, f"unexpected header token {tokens[3]!r}")
        directed_colors = True

    body = lines[1:]
    black: Optional[List[int]] = None
    if kind == GraphKind.BIPARTITE:
        if not body or not body[0][1].startswith("colors:"):
            raise ParseError(body[0][0] if body else header_line, "bipartite graph needs a 'colors:' line")
        colour_line, content = body[0]
        black = []
        for token in content[len("colors:"):].split():
            b = _parse_int(token, colour_line)
            _check_index(b, n, colour_line)
            black.append(b)
        body = body[1:]

    width = 3 if kind == GraphKind.TWO_STRUCTURE else 2
    if len(body) != m:
        where = body[m][0] if len(body) > m else (lines[-1][0])
        raise ParseError(where, f"header announces {m} edges, found {len(body)}")

    pairs: List[Edge] = []
    colors: Dict[Edge, str] = {}
    seen = set()
    symmetric = kind != GraphKind.DIRECTED and not directed_colors
    for number, content in body:
        tokens = content.split()
        if len(tokens) != width:
            raise ParseError(number, f"expected {width} fields, got {len(tokens)}")
        u, v = _parse_int(tokens[0], number), _parse_int(tokens[1], number)
        _check_index(u, n, number)
        _check_index(v, n, number)
        if u == v:
            raise ParseError(number, f"self-loop on vertex {u}")
        key = (min(u, v), max(u, v)) if symmetric else (u, v)
        if key in seen:
            raise DuplicateEdge(u, v, number)
        seen.add(key)
        pairs.append((u, v))
        if width == 3:
            colors[(u, v)] = tokens[2]

    if kind == GraphKind.UNDIRECTED:
        return Graph.undirected(n, pairs)
    if kind == GraphKind.DIRECTED:
        return Graph.directed(n, pairs)
    if kind == GraphKind.BIPARTITE:
        return Graph.bipartite(n, black, pairs)
    return Graph.two_structure(n, colors, directed=directed_colors)


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list text: parse_graph(serialize_graph(g)) == g."""
    header = f"{g.n} {len(g.edges)} {g.kind.value}"
    if g.directed_colors:
        header += " directed"
    out = [header]
    if g.kind == GraphKind.BIPARTITE:
        out.append("colors: " + " ".join(str(b) for b in sorted(g.black or ())))
    for u, v in g.edges:
        if g.kind == GraphKind.TWO_STRUCTURE:
            out.append(f"{u} {v} {g.colors[(u, v)]}")
        else:
            out.append(f"{u} {v}")
    return "\n".join(out) + "\n"
