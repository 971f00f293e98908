"""
Brute-force reference implementations.

Everything here enumerates subsets and applies the definitions literally.
Slow on purpose; the size guards raise TooLarge instead of running for hours.
"""
import logging
from typing import Iterable, List, Optional

from src.config import settings
from src.errors import EmptySet, NotBipartite, TooLarge
from src.instances import Graph, GraphKind
from src.relation_core import ElementSet, Relation, SetFamily, holds, overlaps

logger = logging.getLogger(__name__)


def _guard(n: int, limit: int, what: str):
    if n > limit:
        raise TooLarge(n, limit, what)


def _subsets(n: int) -> Iterable[ElementSet]:
    for mask in range(1, 2 ** n):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def _no_splitter(r: Relation, X: ElementSet) -> bool:
    members = sorted(X)
    first = members[0]
    for s in range(r.n):
        if s in X:
            continue
        if not all(holds(r, s, first, y) for y in members[1:]):
            return False
    return True


def enumerate_homogeneous_sets(r: Relation, max_n: Optional[int] = None) -> SetFamily:
    _guard(r.n, max_n or settings.oracle_max_n, "homogeneous set enumeration")
    family = SetFamily(X for X in _subsets(r.n) if _no_splitter(r, X))
    logger.debug("oracle: %d homogeneous sets for n=%d", len(family), r.n)
    return family


def _small_family(r: Relation) -> SetFamily:
    return enumerate_homogeneous_sets(r, max_n=settings.exhaustive_max_n)


def brute_shs(r: Relation, S: Iterable[int]) -> ElementSet:
    S = frozenset(S)
    if not S:
        raise EmptySet("S")
    containing = [X for X in _small_family(r) if S <= X]
    return min(containing, key=len)


def _maximal(sets: List[ElementSet]) -> SetFamily:
    return SetFamily(X for X in sets if not any(X < Y for Y in sets))


def brute_mhs(r: Relation, x: int) -> SetFamily:
    return _maximal([X for X in _small_family(r) if x not in X])


def brute_is_trivial(r: Relation) -> bool:
    return all(len(X) in (1, r.n) for X in _small_family(r))


def strong_members(family: Iterable[Iterable[int]]) -> SetFamily:
    """Members overlapping no other member."""
    sets = [frozenset(X) for X in family]
    return SetFamily(A for A in sets if not any(overlaps(A, B) for B in sets))


def brute_strong_sets(r: Relation) -> SetFamily:
    return strong_members(_small_family(r))


def _is_bimodule(g: Graph, adjacency, M: ElementSet) -> bool:
    # an outside vertex may not distinguish two inside vertices of the other colour
    for v in range(g.n):
        if v in M:
            continue
        v_black = v in g.black
        seen = {bool(adjacency[v, u]) for u in M if (u in g.black) != v_black}
        if len(seen) > 1:
            return False
    return True


def brute_bimodules(g: Graph) -> SetFamily:
    if g.kind != GraphKind.BIPARTITE:
        raise NotBipartite(f"bimodules need a bipartite graph, got {g.kind.value}")
    _guard(g.n, settings.exhaustive_max_n, "bimodule enumeration")
    adjacency = g.adjacency()
    return SetFamily(M for M in _subsets(g.n) if _is_bimodule(g, adjacency, M))


def brute_strong_bimodules(g: Graph) -> SetFamily:
    return strong_members(brute_bimodules(g))
