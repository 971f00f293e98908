"""
Homogeneous relations stored as one equivalence partition per element.

A relation H on V = {0, ..., n-1} is kept as a dense n x n table where
``table[s, x]`` is the class id of ``x`` in the partition H_s of V minus s.
The diagonal holds -1. Class ids of a row are dense from 0 and numbered in
order of first appearance, so two relations with the same partitions have
identical tables.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.errors import (ElementMissing, ElementRepeated, EmptyClass, EmptySet, IndexOutOfRange,
                        InvalidPartition, NotReflectless, PartNotHomogeneous, QuotientNotWellDefined,
                        SelfInClass)

logger = logging.getLogger(__name__)

ElementSet = FrozenSet[int]


def _set_key(s: ElementSet) -> Tuple[int, ...]:
    return tuple(sorted(s))


def overlaps(a: ElementSet, b: ElementSet) -> bool:
    """A and B overlap when A∩B, A∖B and B∖A are all nonempty."""
    return not a.isdisjoint(b) and not a <= b and not b <= a


def first_appearance_ids(values: np.ndarray) -> np.ndarray:
    """Relabel a 1-d array with ids dense from 0, numbered by first appearance."""
    if values.size == 0:
        return values.astype(np.int64)
    _, first, inverse = np.unique(values, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(first.size)
    return rank[inverse.reshape(-1)]


def _canonical_table(labels: np.ndarray) -> np.ndarray:
    n = labels.shape[0]
    table = np.full((n, n), -1, dtype=np.int64)
    everyone = np.arange(n)
    for s in range(n):
        others = everyone != s
        table[s, others] = first_appearance_ids(labels[s, others])
    return table


class SetFamily:
    """
    Canonical collection of distinct element sets.

    Sets are deduplicated and ordered lexicographically by their sorted
    members, so two families with the same sets compare and serialize equal.
    """

    __slots__ = ("_sets", "_members", "_total_size")

    def __init__(self, sets: Iterable[Iterable[int]] = ()):
        unique = {frozenset(s) for s in sets}
        self._sets: Tuple[ElementSet, ...] = tuple(sorted(unique, key=_set_key))
        self._members = frozenset(unique)
        self._total_size = sum(len(s) for s in self._sets)

    @property
    def sets(self) -> Tuple[ElementSet, ...]:
        return self._sets

    @property
    def total_size(self) -> int:
        return self._total_size

    def __iter__(self) -> Iterator[ElementSet]:
        return iter(self._sets)

    def __len__(self) -> int:
        return len(self._sets)

    def __contains__(self, item: Iterable[int]) -> bool:
        return frozenset(item) in self._members

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SetFamily):
            return self._sets == other._sets
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._sets)

    def __repr__(self) -> str:
        return f"SetFamily({self.as_lists()})"

    def union(self, other: "SetFamily") -> "SetFamily":
        return SetFamily(self._sets + other._sets)

    def as_lists(self) -> List[List[int]]:
        return [sorted(s) for s in self._sets]


@dataclass(frozen=True, eq=False)
class Relation:
    """
    Immutable homogeneous relation.

    ``labels[i]`` is the id element ``i`` had in the relation this one was
    derived from (identity for built relations, kept through restrict and
    quotient).
    """

    table: np.ndarray
    labels: Tuple[int, ...]

    def __post_init__(self):
        self.table.setflags(write=False)

    @classmethod
    def from_labels(cls, labels: np.ndarray, element_labels: Optional[Sequence[int]] = None) -> "Relation":
        """Build from any integer labelling of the off-diagonal entries of each row."""
        labels = np.asarray(labels)
        n = labels.shape[0]
        if element_labels is None:
            element_labels = range(n)
        return cls(_canonical_table(labels), tuple(int(v) for v in element_labels))

    @property
    def n(self) -> int:
        return self.table.shape[0]

    @cached_property
    def rows(self) -> List[List[int]]:
        """Plain-list copy of the table for element-wise hot loops."""
        return self.table.tolist()

    def class_of(self, s: int, x: int) -> int:
        if s == x:
            raise NotReflectless(s, x, x)
        return int(self.table[s, x])

    def classes(self, s: int) -> List[List[int]]:
        """Partition of V∖{s} into the classes of H_s, ordered by class id."""
        row = self.rows[s]
        count = max((c for c in row), default=-1) + 1
        parts: List[List[int]] = [[] for _ in range(count)]
        for x, c in enumerate(row):
            if x != s:
                parts[c].append(x)
        return parts

    def to_partitions(self) -> List[List[List[int]]]:
        return [self.classes(s) for s in range(self.n)]

    def ground_set(self) -> ElementSet:
        return frozenset(range(self.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        return self.table.shape == other.table.shape and bool(np.array_equal(self.table, other.table))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Relation(n={self.n})"


@dataclass(frozen=True)
class CongruencePartition:
    """Partition of the ground set into homogeneous parts."""

    parts: Tuple[ElementSet, ...]

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]], n: int) -> "CongruencePartition":
        frozen = tuple(frozenset(p) for p in parts)
        seen: set = set()
        for part in frozen:
            if not part:
                raise InvalidPartition("partition contains an empty part")
            for x in part:
                if not 0 <= x < n:
                    raise IndexOutOfRange(x, n)
                if x in seen:
                    raise InvalidPartition(f"element {x} belongs to two parts")
                seen.add(x)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise InvalidPartition(f"elements {missing} belong to no part")
        return cls(frozen)

    @classmethod
    def singletons(cls, n: int) -> "CongruencePartition":
        return cls(tuple(frozenset([v]) for v in range(n)))


def build_relation(n: int, partitions: Sequence[Sequence[Sequence[int]]]) -> Relation:
    """
    Build a relation from, for each element s, a partition of V∖{s}.
    """
    if n < 1:
        raise InvalidPartition(f"ground set must have at least one element, got n={n}")
    if len(partitions) != n:
        raise InvalidPartition(f"expected {n} partitions, got {len(partitions)}")

    labels = np.full((n, n), -1, dtype=np.int64)
    for s, classes in enumerate(partitions):
        for class_id, members in enumerate(classes):
            if len(members) == 0:
                raise EmptyClass(s)
            for x in members:
                if not 0 <= x < n:
                    raise IndexOutOfRange(x, n)
                if x == s:
                    raise SelfInClass(s)
                if labels[s, x] != -1:
                    raise ElementRepeated(s, x)
                labels[s, x] = class_id
        for x in range(n):
            if x != s and labels[s, x] == -1:
                raise ElementMissing(s, x)

    return Relation.from_labels(labels)


def holds(r: Relation, s: int, x: int, y: int) -> bool:
    """H(s|xy): x and y lie in the same class of H_s."""
    if s == x or s == y:
        raise NotReflectless(s, x, y)
    if x == y:
        return True
    return r.rows[s][x] == r.rows[s][y]


def _as_index_array(X: Iterable[int]) -> np.ndarray:
    return np.fromiter(X, dtype=np.intp)


def splitters(r: Relation, X: ElementSet) -> ElementSet:
    """Every s outside X that puts two elements of X in different classes of H_s."""
    if not X:
        raise EmptySet("X")
    cols = _as_index_array(X)
    block = r.table[:, cols]
    split = block.min(axis=1) != block.max(axis=1)
    split[cols] = False
    return frozenset(np.flatnonzero(split).tolist())


def splitter_count(r: Relation, X: ElementSet) -> int:
    if not X:
        return -r.n
    return len(splitters(r, X))


def is_homogeneous_set(r: Relation, X: ElementSet) -> bool:
    if not X:
        raise EmptySet("X")
    return not splitters(r, X)


def restrict(r: Relation, X: ElementSet) -> Relation:
    """Induced relation H[X], re-indexed by the sorted order of X."""
    if not X:
        raise EmptySet("X")
    idx = np.array(sorted(X), dtype=np.intp)
    sub = r.table[np.ix_(idx, idx)]
    return Relation.from_labels(sub, element_labels=[r.labels[i] for i in idx])


def _same_partition(a: np.ndarray, b: np.ndarray) -> bool:
    return bool(np.array_equal(first_appearance_ids(a), first_appearance_ids(b)))


def quotient(r: Relation, p: Union[CongruencePartition, Sequence[Iterable[int]]], strict: bool = False) -> Relation:
    """
    Relation induced on the parts of ``p`` through their minimum elements.

    With ``strict`` every element of every part is checked to perceive the
    other parts exactly like the representative does.
    """
    if not isinstance(p, CongruencePartition):
        p = CongruencePartition.of(p, r.n)

    for i, part in enumerate(p.parts):
        outside = splitters(r, part)
        if outside:
            raise PartNotHomogeneous(i, sorted(outside))

    reps = [min(part) for part in p.parts]
    rep_idx = np.array(reps, dtype=np.intp)

    if strict:
        for i, part in enumerate(p.parts):
            others = np.delete(rep_idx, i)
            reference = r.table[reps[i], others]
            for y in sorted(part):
                if y != reps[i] and not _same_partition(r.table[y, others], reference):
                    raise QuotientNotWellDefined(i, y)

    logger.debug("quotient of n=%d onto %d parts", r.n, len(reps))
    return Relation.from_labels(r.table[np.ix_(rep_idx, rep_idx)], element_labels=[r.labels[i] for i in reps])
