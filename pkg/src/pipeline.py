"""
End-to-end runs shared by the command line and the HTTP service: pick the
structure an input stands for, decompose it, answer queries and run checks.
"""
import logging
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Union

from src.algorithms import is_trivial, mhs, shs
from src.axioms import (Axiom, AxiomReport, ClosureLevel, SubmodularMode, check_against_oracle, check_axiom,
                        check_family_closure, check_submodularity)
from src.config import settings
from src.errors import IndexOutOfRange, MalformedGraph, NotWeaklyPartitive
from src.instances import (BimoduleInstance, Graph, GraphKind, PathMode, distance_k_relation, from_directed,
                           from_two_structure, from_undirected, path_avoiding_relation)
from src.oracle import brute_bimodules, enumerate_homogeneous_sets, strong_members
from src.relation_core import Relation, SetFamily
from src.strong_tree import StrongTree, build_tree, strong_sets, type_nodes

logger = logging.getLogger(__name__)

Structure = Union[Relation, BimoduleInstance]


class InstanceKind(str, Enum):
    AUTO = "auto"
    GRAPH = "graph"
    BIMODULE = "bimodule"
    DISTANCE = "distance"
    PATH = "path"
    PATH_NEIGHBORHOOD = "path-neighborhood"


class TypingMode(str, Enum):
    OFF = "off"
    ON = "on"
    STRICT = "strict"


def graph_relation(g: Graph) -> Relation:
    """The relation a graph defines by its kind; bipartite graphs read as undirected."""
    if g.kind == GraphKind.DIRECTED:
        return from_directed(g)
    if g.kind == GraphKind.TWO_STRUCTURE:
        return from_two_structure(g)
    return from_undirected(g)


def structure_of(item: Union[Graph, Relation], kind: Union[InstanceKind, str] = InstanceKind.AUTO,
                 k: int = 2) -> Structure:
    kind = InstanceKind(kind)
    if isinstance(item, Relation):
        if kind not in (InstanceKind.AUTO, InstanceKind.GRAPH):
            raise MalformedGraph(f"--kind {kind.value} needs a graph input, got a relation")
        return item

    if kind == InstanceKind.AUTO:
        kind = InstanceKind.BIMODULE if item.kind == GraphKind.BIPARTITE else InstanceKind.GRAPH
    if kind == InstanceKind.BIMODULE:
        return BimoduleInstance(item)
    if kind == InstanceKind.DISTANCE:
        return distance_k_relation(item, k)
    if kind == InstanceKind.PATH:
        return path_avoiding_relation(item, PathMode.VERTEX)
    if kind == InstanceKind.PATH_NEIGHBORHOOD:
        return path_avoiding_relation(item, PathMode.NEIGHBORHOOD)
    return graph_relation(item)


def relation_of(item: Union[Graph, Relation], kind: Union[InstanceKind, str] = InstanceKind.AUTO,
                k: int = 2) -> Relation:
    """Like structure_of, reading bipartite graphs as undirected relations."""
    if isinstance(item, Graph) and InstanceKind(kind) == InstanceKind.AUTO:
        return graph_relation(item)
    structure = structure_of(item, kind, k)
    if isinstance(structure, BimoduleInstance):
        raise MalformedGraph("bimodules are not a relation, query the graph with --kind graph")
    return structure


def _known_weakly_partitive(item: Union[Graph, Relation], kind: InstanceKind) -> bool:
    # graph, digraph and 2-structure relations all satisfy A2 and A3
    return isinstance(item, Graph) and kind in (InstanceKind.AUTO, InstanceKind.GRAPH)


def decompose(item: Union[Graph, Relation], kind: Union[InstanceKind, str] = InstanceKind.AUTO,
              typing: Union[TypingMode, str] = TypingMode.ON, k: int = 2,
              threads: Optional[int] = None) -> StrongTree:
    kind = InstanceKind(kind)
    typing = TypingMode(typing)
    structure = structure_of(item, kind, k)
    tree = build_tree(strong_sets(structure, threads=threads))
    logger.info("decomposed n=%d into %d strong sets", structure.n, len(list(tree.nodes())))

    if typing == TypingMode.OFF:
        return tree
    if isinstance(structure, BimoduleInstance):
        logger.info("bimodule tree nodes are left unclassified")
        return tree
    quotient_sound = _known_weakly_partitive(item, kind) or check_axiom(structure, Axiom.A2).holds
    weakly_partitive = quotient_sound or check_axiom(structure, Axiom.A3).holds
    if not weakly_partitive:
        if typing == TypingMode.STRICT:
            raise NotWeaklyPartitive(range(structure.n), "(the relation violates A2 and A3)")
        logger.warning("relation violates A2 and A3, node kinds are not meaningful")
    elif not quotient_sound:
        logger.info("relation violates A2, typing nodes on their full members")
    return type_nodes(tree, structure, weakly_partitive=weakly_partitive, strict=typing == TypingMode.STRICT,
                      representatives=quotient_sound)


def _check_ids(r: Relation, ids: Iterable[int]):
    for x in ids:
        if not 0 <= x < r.n:
            raise IndexOutOfRange(x, r.n)


def query_shs(r: Relation, S: Iterable[int]) -> List[int]:
    S = list(S)
    _check_ids(r, S)
    return sorted(shs(r, S))


def query_mhs(r: Relation, x: int) -> List[List[int]]:
    _check_ids(r, [x])
    return mhs(r, x).as_lists()


def query_trivial(r: Relation) -> bool:
    return is_trivial(r)


def expected_axioms(item: Union[Graph, Relation], kind: InstanceKind = InstanceKind.AUTO) -> List[Axiom]:
    """Axioms the input is known to satisfy, or all four when nothing is known."""
    if isinstance(item, Graph) and kind in (InstanceKind.AUTO, InstanceKind.GRAPH):
        if item.kind == GraphKind.DIRECTED or (item.kind == GraphKind.TWO_STRUCTURE and item.directed_colors):
            return [Axiom.A2, Axiom.A3]
    return list(Axiom)


def closure_level(r: Relation) -> ClosureLevel:
    return ClosureLevel.PARTITIVE if check_axiom(r, Axiom.A1).holds else ClosureLevel.WEAKLY_PARTITIVE


def run_checks(item: Union[Graph, Relation], kind: Union[InstanceKind, str] = InstanceKind.AUTO, k: int = 2,
               axioms: Optional[Sequence[Union[Axiom, str]]] = None, closure: Optional[Union[ClosureLevel, str]] = None,
               submodular: Optional[Union[SubmodularMode, str]] = None, oracle: bool = False,
               samples: Optional[int] = None, seed: Optional[int] = None) -> List[AxiomReport]:
    """
    Run the requested checks. ``axioms=[]`` means the axioms expected for
    the input; ``None`` skips the check. Same for ``closure`` ("auto" picks
    partitive when A1 holds).
    """
    kind = InstanceKind(kind)
    reports: List[AxiomReport] = []
    structure = structure_of(item, kind, k)
    r = structure if isinstance(structure, Relation) else relation_of(item, InstanceKind.GRAPH)

    if axioms is not None:
        for which in (axioms or expected_axioms(item, kind)):
            reports.append(check_axiom(r, which))
    if closure is not None:
        level = closure_level(r) if closure == "auto" else ClosureLevel(closure)
        reports.append(check_family_closure(r, level))
    if submodular is not None:
        if submodular == "auto":
            submodular = SubmodularMode.EXHAUSTIVE if r.n <= 10 else SubmodularMode.SAMPLED
        reports.append(check_submodularity(r, submodular, samples=samples, seed=seed))
    if oracle:
        reports.extend(check_against_oracle(structure))

    for report in reports:
        logger.info("%s %s", "✓" if report.holds else "✗", report.axiom)
    return reports


def oracle_families(item: Union[Graph, Relation], kind: Union[InstanceKind, str] = InstanceKind.AUTO,
                    k: int = 2) -> dict:
    """Brute-force homogeneous and strong sets of a small input."""
    structure = structure_of(item, kind, k)
    if isinstance(structure, BimoduleInstance):
        family = brute_bimodules(structure.graph)
    else:
        family = enumerate_homogeneous_sets(structure, max_n=settings.exhaustive_max_n)
    strong: SetFamily = strong_members(family)
    return {"homogeneous_sets": family.as_lists(), "strong_sets": strong.as_lists()}
