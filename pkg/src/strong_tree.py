"""
Strong homogeneous sets and their inclusion tree.

The strong sets are read off the overlap classes of the family Z of
maximal homogeneous sets containing x but not y (over all x, y): every
strong set is the support or an atom of some class. Candidates are kept
only when homogeneous; for relations satisfying A2 or A3 none is ever
dropped, for the others some atoms are differences of overlapping sets
that an inside element distinguishes.
"""
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Protocol, Sequence, Tuple, Union

import numpy as np

from src.algorithms import RefinementStats, mhs
from src.config import settings
from src.errors import ClosureViolation, ComputationError, NotWeaklyPartitive, OverlappingSets, TooLarge
from src.partition import RefinablePartition
from src.relation_core import (ElementSet, Relation, SetFamily, is_homogeneous_set, overlaps, quotient,
                               restrict, splitter_count)
from src.union_find import UnionFind

logger = logging.getLogger(__name__)


class FamilySource(Protocol):
    """Anything the pipeline can decompose: a size, a homogeneity test and a maximal-set generator."""

    n: int

    def is_homogeneous_set(self, X: ElementSet) -> bool: ...

    def maximal_sets_avoiding(self, y: int) -> Iterable[ElementSet]: ...


class RelationSource:
    def __init__(self, relation: Relation, stats: Optional[RefinementStats] = None):
        self.relation = relation
        self.n = relation.n
        self.stats = stats
        self._lock = threading.Lock()

    def is_homogeneous_set(self, X: ElementSet) -> bool:
        return is_homogeneous_set(self.relation, X)

    def maximal_sets_avoiding(self, y: int) -> Iterable[ElementSet]:
        local = RefinementStats()
        family = mhs(self.relation, y, stats=local)
        if self.stats is not None:
            with self._lock:
                self.stats.merge(local)
        return family.sets


def as_family_source(structure: Union[Relation, FamilySource]) -> FamilySource:
    if isinstance(structure, Relation):
        return RelationSource(structure)
    return structure


@dataclass(frozen=True)
class OverlapClass:
    members: Tuple[ElementSet, ...]
    support: ElementSet
    atoms: Tuple[ElementSet, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1


class NodeKind(str, Enum):
    LEAF = "leaf"
    PRIME = "prime"
    DEGENERATE = "degenerate"
    LINEAR = "linear"
    UNCLASSIFIED = "unclassified"


@dataclass(eq=False)
class TreeNode:
    members: ElementSet
    kind: NodeKind = NodeKind.UNCLASSIFIED
    children: List["TreeNode"] = field(default_factory=list)
    parent: Optional["TreeNode"] = field(default=None, repr=False)
    # minimum member of each child, in linear order (linear nodes only)
    order: Optional[Tuple[int, ...]] = None

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def to_dict(self) -> dict:
        data = {
            "members": sorted(self.members),
            "kind": self.kind.value,
            "children": [child.to_dict() for child in self.children],
        }
        if self.order is not None:
            data["order"] = list(self.order)
        return data


@dataclass(eq=False)
class StrongTree:
    root: TreeNode

    @property
    def n(self) -> int:
        return len(self.root.members)

    def nodes(self) -> Iterator[TreeNode]:
        """Preorder traversal, children by minimum member."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def internal_nodes(self) -> List[TreeNode]:
        return [node for node in self.nodes() if not node.is_leaf]

    def member_sets(self) -> SetFamily:
        return SetFamily(node.members for node in self.nodes())

    def to_dict(self) -> dict:
        return {"node": self.root.to_dict()}

    def outline(self) -> str:
        lines = []

        def walk(node: TreeNode, depth: int):
            label = node.kind.value
            if node.order is not None:
                label += f" order={list(node.order)}"
            lines.append(f"{'  ' * depth}{label} {sorted(node.members)}")
            for child in node.children:
                walk(child, depth + 1)

        walk(self.root, 0)
        return "\n".join(lines) + "\n"

    def weak_sets(self, limit: int = 100_000) -> SetFamily:
        """
        Every set the typed tree encodes: the strong sets, all unions of at
        least two children of degenerate nodes and all runs of consecutive
        children of linear nodes.
        """
        found = [node.members for node in self.nodes()]
        for node in self.internal_nodes():
            children = [child.members for child in node.children]
            k = len(children)
            if node.kind == NodeKind.DEGENERATE:
                if 2 ** k > limit:
                    raise TooLarge(k, limit.bit_length() - 1, "degenerate node expansion")
                for mask in range(1, 2 ** k):
                    if bin(mask).count("1") >= 2:
                        found.append(frozenset().union(*(children[i] for i in range(k) if mask >> i & 1)))
            elif node.kind == NodeKind.LINEAR:
                position = {min(child): i for i, child in enumerate(children)}
                ordered = [children[position[m]] for m in node.order]
                for a in range(k):
                    for b in range(a + 2, k + 1):
                        found.append(frozenset().union(*ordered[a:b]))
            if len(found) > limit:
                raise TooLarge(len(found), limit, "weak-set expansion")
        return SetFamily(found)


def z_family(structure: Union[Relation, FamilySource], threads: Optional[int] = None,
             stats: Optional[RefinementStats] = None) -> SetFamily:
    """Union over all y of the maximal homogeneous sets avoiding y, deduplicated."""
    if isinstance(structure, Relation):
        source: FamilySource = RelationSource(structure, stats)
    else:
        source = structure
    threads = settings.threads if threads is None else threads
    if threads < 1:
        raise ValueError(f"threads must be at least 1, got {threads}")

    if threads > 1 and source.n > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(source.maximal_sets_avoiding, range(source.n)))
    else:
        parts = [source.maximal_sets_avoiding(y) for y in range(source.n)]

    family = SetFamily(s for part in parts for s in part)
    logger.debug("z-family: %d distinct sets, total size %d", len(family), family.total_size)
    return family


def _overlapping_pairs(sets: Sequence[ElementSet]) -> Iterator[Tuple[int, int]]:
    """
    Index pairs (i, j) of overlapping sets. Sets are swept by minimum
    element; only sets sharing an element are compared.
    """
    containing: Dict[int, List[int]] = {}
    for i, s in enumerate(sets):
        if len(s) > 1:
            for x in s:
                containing.setdefault(x, []).append(i)

    sweep = sorted((i for i, s in enumerate(sets) if len(s) > 1), key=lambda i: (min(sets[i]), -len(sets[i])))
    position = {i: p for p, i in enumerate(sweep)}
    for i in sweep:
        candidates = set()
        for x in sets[i]:
            candidates.update(containing[x])
        for j in sorted(candidates, key=position.__getitem__):
            if position[j] > position[i] and overlaps(sets[i], sets[j]):
                yield i, j


def atoms(c: OverlapClass) -> List[ElementSet]:
    """Coarsest partition of the support compatible with every member."""
    p = RefinablePartition([sorted(c.support)])
    for member in c.members:
        p.refine(member)
    return list(SetFamily(p.classes()))


def overlap_classes(f: SetFamily) -> List[OverlapClass]:
    """
    Classes of the transitive closure of the overlap relation, with their
    supports and atoms. Disjoint-set merging over overlapping pairs; the
    pair search can be swapped for a linear-time method without changing
    the result.
    """
    sets = list(f)
    uf = UnionFind()
    for i in range(len(sets)):
        uf.find(i)
    for i, j in _overlapping_pairs(sets):
        uf.union(i, j)

    classes = []
    for component in uf.components():
        members = tuple(sorted((sets[i] for i in component), key=lambda s: sorted(s)))
        support = frozenset().union(*members)
        cls = OverlapClass(members, support)
        classes.append(OverlapClass(members, support, tuple(atoms(cls))))
    classes.sort(key=lambda c: (sorted(c.support), [sorted(m) for m in c.members]))
    return classes


def check_overlap_union_closure(source: Union[Relation, FamilySource], family: SetFamily):
    """Raise ClosureViolation if two overlapping members have a non-homogeneous union."""
    source = as_family_source(source)
    sets = list(family)
    for i, j in _overlapping_pairs(sets):
        if not source.is_homogeneous_set(sets[i] | sets[j]):
            raise ClosureViolation(sets[i], sets[j])


def strong_sets(structure: Union[Relation, FamilySource], threads: Optional[int] = None,
                check_closure: Optional[bool] = None) -> SetFamily:
    """
    Strong homogeneous sets: supports and atoms of the overlap classes of
    the Z-family, plus V and the singletons.

    ``check_closure`` defaults to on for sources that are not relations,
    whose families need not be closed under union of overlapping sets.
    """
    source = as_family_source(structure)
    n = source.n
    z = z_family(source, threads)
    if check_closure is None:
        check_closure = not isinstance(structure, Relation)
    if check_closure:
        check_overlap_union_closure(source, z)

    classes = overlap_classes(z)
    candidates = {frozenset(range(n))} | {frozenset([v]) for v in range(n)}
    for c in classes:
        candidates.add(c.support)
        candidates.update(c.atoms)

    strong = SetFamily(s for s in candidates if len(s) in (1, n) or source.is_homogeneous_set(s))
    logger.debug("%d overlap classes, %d candidates, %d strong sets", len(classes), len(candidates), len(strong))
    return strong


def build_tree(strong: Iterable[Iterable[int]]) -> StrongTree:
    """Order a laminar family containing V and the singletons into its inclusion tree."""
    sets = sorted({frozenset(s) for s in strong}, key=lambda s: (-len(s), sorted(s)))
    if not sets:
        raise ComputationError("cannot build a tree from an empty family")

    root = TreeNode(sets[0])
    deepest: Dict[int, TreeNode] = {x: root for x in root.members}
    for s in sets[1:]:
        if not s <= root.members:
            raise OverlappingSets(s, root.members)
        parent = deepest[min(s)]
        for x in s:
            other = deepest[x]
            if other is not parent:
                raise OverlappingSets(s, parent.members if x not in parent.members else other.members)
        node = TreeNode(s, parent=parent)
        parent.children.append(node)
        for x in s:
            deepest[x] = node

    tree = StrongTree(root)
    for node in tree.nodes():
        node.children.sort(key=lambda child: min(child.members))
        if node.is_leaf:
            if len(node.members) != 1:
                raise ComputationError(f"family lacks the singletons of {sorted(node.members)}")
            node.kind = NodeKind.LEAF
        else:
            covered = sum(len(child.members) for child in node.children)
            if covered != len(node.members):
                raise ComputationError(f"family lacks singletons inside {sorted(node.members)}")
    return tree


def _pair_matrix(q: Relation) -> np.ndarray:
    """homogeneous[i, j]: elements i and j of q form a homogeneous pair."""
    k = q.n
    table = q.table
    homogeneous = np.zeros((k, k), dtype=bool)
    for i in range(k):
        same = table == table[:, [i]]
        same[i, :] = True
        np.fill_diagonal(same, True)
        homogeneous[i] = same.all(axis=0)
    np.fill_diagonal(homogeneous, False)
    return homogeneous


class _ChildUnions:
    """
    Homogeneity of unions of children of one node.

    With ``representatives`` the unions are tested on the quotient of the
    node by its children, which needs A2. Otherwise every member of the
    union is tested against the whole node.
    """

    def __init__(self, r: Relation, node: TreeNode, representatives: bool):
        position = {v: i for i, v in enumerate(sorted(node.members))}
        self.local = restrict(r, node.members)
        self.parts = [frozenset(position[v] for v in child.members) for child in node.children]
        self.q = quotient(self.local, self.parts) if representatives else None

    def pair_matrix(self) -> np.ndarray:
        if self.q is not None:
            return _pair_matrix(self.q)
        k = len(self.parts)
        homogeneous = np.zeros((k, k), dtype=bool)
        for i in range(k):
            for j in range(i + 1, k):
                homogeneous[i, j] = homogeneous[j, i] = self.is_homogeneous(frozenset((i, j)))
        return homogeneous

    def is_homogeneous(self, children: ElementSet) -> bool:
        if self.q is not None:
            return splitter_count(self.q, children) == 0
        return is_homogeneous_set(self.local, frozenset().union(*(self.parts[i] for i in children)))


def _path_order(homogeneous: np.ndarray) -> Optional[List[int]]:
    k = homogeneous.shape[0]
    degree = homogeneous.sum(axis=1)
    if homogeneous.sum() // 2 != k - 1 or degree.max() > 2:
        return None
    ends = np.flatnonzero(degree == 1)
    if ends.size != 2:
        return None
    order = [int(ends[0])]
    previous = -1
    while len(order) < k:
        current = order[-1]
        following = [int(j) for j in np.flatnonzero(homogeneous[current]) if j != previous]
        if not following:
            return None
        previous = current
        order.append(following[0])
    return order if len(set(order)) == k else None


def _runs_homogeneous(unions: _ChildUnions, order: List[int]) -> bool:
    for a in range(len(order)):
        for b in range(a + 3, len(order) + 1):
            if len(order[a:b]) < len(order) and not unions.is_homogeneous(frozenset(order[a:b])):
                return False
    return True


def type_nodes(t: StrongTree, r: Relation, weakly_partitive: bool = True, strict: bool = False,
               representatives: bool = True) -> StrongTree:
    """
    Label internal nodes prime, degenerate or linear from which unions of
    two children are homogeneous. Two-child nodes are degenerate.

    With ``representatives`` (relations satisfying A2) unions are tested on
    the quotient of the node by its children; pass False for relations that
    only satisfy A3, whose unions are then tested member by member.

    Without ``weakly_partitive`` the labels are meaningless and every
    internal node is left unclassified. A node fitting no shape raises
    NotWeaklyPartitive when ``strict``, else stays unclassified.
    """
    for node in t.internal_nodes():
        node.order = None
        if not weakly_partitive:
            node.kind = NodeKind.UNCLASSIFIED
            continue
        k = len(node.children)
        if k == 2:
            node.kind = NodeKind.DEGENERATE
            continue

        unions = _ChildUnions(r, node, representatives)
        homogeneous = unions.pair_matrix()
        pairs = int(homogeneous.sum()) // 2

        if pairs == k * (k - 1) // 2:
            node.kind = NodeKind.DEGENERATE
        elif pairs == 0:
            node.kind = NodeKind.PRIME
        else:
            order = _path_order(homogeneous)
            if order is not None and _runs_homogeneous(unions, order):
                node.kind = NodeKind.LINEAR
                node.order = tuple(min(node.children[i].members) for i in order)
            elif strict:
                raise NotWeaklyPartitive(node.members, f"({pairs} homogeneous child pairs)")
            else:
                logger.warning("node %s fits no node shape, left unclassified", sorted(node.members))
                node.kind = NodeKind.UNCLASSIFIED
    return t
