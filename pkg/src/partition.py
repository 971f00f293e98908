"""
Partition refinement over a working subset of elements.

Classes form a doubly-linked list. Splitting a class by a refining set R
moves the elements of C∩R into a new class inserted immediately before C,
so the pieces of a class always stay consecutive and a *group* (the class
an element belonged to before the current round) is a run of consecutive
classes sharing the same group tag.
"""
from collections import deque
from itertools import count
from typing import Deque, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

_group_ids = count()


class PartitionClass:
    """One class of a RefinablePartition."""

    __slots__ = ("members", "prev", "next", "group", "twin")

    def __init__(self, group: int):
        # dict keeps insertion order, O(1) add/remove
        self.members: Dict[int, None] = {}
        self.prev: Optional["PartitionClass"] = None
        self.next: Optional["PartitionClass"] = None
        self.group = group
        # class receiving C∩R during an ongoing refine
        self.twin: Optional["PartitionClass"] = None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def elements(self) -> FrozenSet[int]:
        return frozenset(self.members)

    def __repr__(self) -> str:
        return f"PartitionClass({list(self.members)})"


class RefinablePartition:
    def __init__(self, classes: Iterable[Iterable[int]]):
        self._head: Optional[PartitionClass] = None
        self._tail: Optional[PartitionClass] = None
        self._class_of: Dict[int, PartitionClass] = {}
        self._size = 0

        group = next(_group_ids)
        for members in classes:
            cls = PartitionClass(group)
            for x in members:
                if x in self._class_of:
                    raise ValueError(f"element {x} given twice")
                cls.members[x] = None
                self._class_of[x] = cls
            if cls.members:
                self._append(cls)

    def _append(self, cls: PartitionClass):
        cls.prev = self._tail
        cls.next = None
        if self._tail is None:
            self._head = cls
        else:
            self._tail.next = cls
        self._tail = cls
        self._size += 1

    def _insert_before(self, cls: PartitionClass, anchor: PartitionClass):
        cls.next = anchor
        cls.prev = anchor.prev
        if anchor.prev is None:
            self._head = cls
        else:
            anchor.prev.next = cls
        anchor.prev = cls
        self._size += 1

    def _unlink(self, cls: PartitionClass):
        if cls.prev is None:
            self._head = cls.next
        else:
            cls.prev.next = cls.next
        if cls.next is None:
            self._tail = cls.prev
        else:
            cls.next.prev = cls.prev
        cls.prev = cls.next = None
        self._size -= 1

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[PartitionClass]:
        cls = self._head
        while cls is not None:
            yield cls
            cls = cls.next

    def __contains__(self, x: int) -> bool:
        return x in self._class_of

    def class_of(self, x: int) -> PartitionClass:
        return self._class_of[x]

    def classes(self) -> List[FrozenSet[int]]:
        """Current classes in list order."""
        return [cls.elements() for cls in self]

    def groups(self) -> List[List[PartitionClass]]:
        """Runs of consecutive classes sharing a group tag."""
        runs: List[List[PartitionClass]] = []
        for cls in self:
            if runs and runs[-1][0].group == cls.group:
                runs[-1].append(cls)
            else:
                runs.append([cls])
        return runs

    def reset_groups(self):
        """Make every current class its own group."""
        for cls in self:
            cls.group = next(_group_ids)

    def refine(self, refining_set: Iterable[int]) -> List[Tuple[PartitionClass, PartitionClass]]:
        """
        Split every class C that properly overlaps R into C∩R and C∖R.

        Runs in O(|R|). Elements of R outside the working subset are ignored.
        Returns the (C∩R, C∖R) pairs of the classes actually split.
        """
        touched: List[PartitionClass] = []
        for x in refining_set:
            cls = self._class_of.get(x)
            if cls is None:
                continue
            if cls.twin is None:
                twin = PartitionClass(cls.group)
                self._insert_before(twin, cls)
                cls.twin = twin
                touched.append(cls)
            del cls.members[x]
            cls.twin.members[x] = None
            self._class_of[x] = cls.twin

        splits: List[Tuple[PartitionClass, PartitionClass]] = []
        for cls in touched:
            twin = cls.twin
            cls.twin = None
            if cls.members:
                splits.append((twin, cls))
            else:
                # C was included in R, its twin takes its place
                self._unlink(cls)
        return splits


class RefiningSetPool:
    """FIFO of refining sets with size accounting."""

    def __init__(self):
        self._queue: Deque[List[int]] = deque()
        self.total_size = 0

    def push(self, refining_set: List[int]):
        self._queue.append(refining_set)
        self.total_size += len(refining_set)

    def pop(self) -> List[int]:
        return self._queue.popleft()

    def __len__(self) -> int:
        return len(self._queue)

    def __bool__(self) -> bool:
        return bool(self._queue)
