"""
Smallest homogeneous set containing a subset, maximal homogeneous sets
avoiding an element, and the triviality test.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.errors import EmptySet, PivotInside
from src.partition import PartitionClass, RefinablePartition, RefiningSetPool
from src.relation_core import ElementSet, Relation, SetFamily

logger = logging.getLogger(__name__)


@dataclass
class RefinementStats:
    """Work counters of one or more mhs runs."""

    rounds: int = 0
    # (pivot y, element z) pairs examined, bounded by n^2 per run
    pivot_charges: int = 0
    refine_work: int = 0
    splits: int = 0

    def merge(self, other: "RefinementStats"):
        self.rounds += other.rounds
        self.pivot_charges += other.pivot_charges
        self.refine_work += other.refine_work
        self.splits += other.splits


def shs(r: Relation, S: Iterable[int]) -> ElementSet:
    """
    Smallest homogeneous set containing S, in O(n·|SHS(S)|).

    F holds every splitter of M not yet absorbed; an element enters F at
    most once. When y joins M, the new splitters are exactly the z that
    separate x from y.
    """
    S = frozenset(S)
    if not S:
        raise EmptySet("S")

    table = r.table
    x = min(S)
    in_m = np.zeros(r.n, dtype=bool)
    queued = np.zeros(r.n, dtype=bool)
    in_m[x] = True

    worklist: List[int] = sorted(S - {x})
    queued[worklist] = True
    head = 0
    while head < len(worklist):
        y = worklist[head]
        head += 1
        in_m[y] = True
        distinguishing = table[:, x] != table[:, y]
        fresh = np.flatnonzero(distinguishing & ~in_m & ~queued)
        if fresh.size:
            queued[fresh] = True
            worklist.extend(fresh.tolist())

    return frozenset(np.flatnonzero(in_m).tolist())


def partition_by_pivot_classes(Z: Sequence[int], y: int, r: Relation) -> List[List[int]]:
    """Group Z by the class of H_y each element falls in, in O(|Z|)."""
    row = r.rows[y]
    buckets: Dict[int, List[int]] = defaultdict(list)
    for z in Z:
        if z == y:
            raise PivotInside(y)
        buckets[row[z]].append(z)
    return list(buckets.values())


def refine_by_set(p: RefinablePartition,
                  R: Iterable[int]) -> Tuple[RefinablePartition, List[Tuple[PartitionClass, PartitionClass]]]:
    return p, p.refine(R)


def _initial_classes(r: Relation, x: int, order: Sequence[int]) -> List[List[int]]:
    row = r.rows[x]
    buckets: Dict[int, List[int]] = defaultdict(list)
    for v in order:
        if v != x:
            buckets[row[v]].append(v)
    return [buckets[c] for c in sorted(buckets)]


def mhs(r: Relation, x: int, order: Optional[Sequence[int]] = None,
        stats: Optional[RefinementStats] = None) -> SetFamily:
    """
    Partition of V∖{x} into the maximal homogeneous sets avoiding x.

    Starts from the classes of H_x and refines round by round. In each
    round a pivot y is only tested against the classes that shared its
    group (its class of the previous round), so every (y, z) pair is
    charged once over the whole run.
    """
    if order is None:
        order = range(r.n)
    run = RefinementStats()
    p = RefinablePartition(_initial_classes(r, x, order))

    while True:
        run.rounds += 1
        pool = RefiningSetPool()
        for group in p.groups():
            if len(group) < 2:
                continue
            for cls in group:
                Z = [z for other in group if other is not cls for z in other.members]
                for y in cls.members:
                    run.pivot_charges += len(Z)
                    parts = partition_by_pivot_classes(Z, y, r)
                    if len(parts) > 1:
                        for part in parts:
                            pool.push(part)
        p.reset_groups()
        if not pool:
            break
        run.refine_work += pool.total_size
        while pool:
            run.splits += len(p.refine(pool.pop()))

    if stats is not None:
        stats.merge(run)
    logger.debug("mhs(%d): %d classes, %d rounds, %d pivot charges", x, len(p), run.rounds, run.pivot_charges)
    return SetFamily(p.classes())


def is_trivial(r: Relation) -> bool:
    """True iff the only homogeneous sets are V and the singletons, in O(n^2)."""
    if r.n < 2:
        return True
    x, y = 0, 1
    for pivot in (x, y):
        if any(len(part) > 1 for part in mhs(r, pivot)):
            return False
    return len(shs(r, {x, y})) == r.n
