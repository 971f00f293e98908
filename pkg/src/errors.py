"""
Exception hierarchy shared by the core, the CLI and the HTTP layer.

``InputError`` covers malformed input (exit code 2 / HTTP 400),
``ComputationError`` covers failures while running an operation on a
well-formed input (exit code 3 / HTTP 422).
"""
from typing import Optional, Sequence


class HomodecError(Exception):
    """Base class of every error raised by homodec."""


class InputError(HomodecError, ValueError):
    """The input does not describe a valid graph or relation."""


class ComputationError(HomodecError):
    """An operation cannot be carried out on the given input."""


# Input errors

class ParseError(InputError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DuplicateEdge(InputError):
    def __init__(self, u: int, v: int, line: Optional[int] = None):
        self.edge = (u, v)
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}duplicate edge {u} {v}")


class IndexOutOfRange(InputError):
    def __init__(self, index: int, n: int, line: Optional[int] = None):
        self.index = index
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}element {index} outside [0, {n})")


class MalformedGraph(InputError):
    pass


class NotBipartite(InputError):
    pass


class IncompleteColoring(InputError):
    pass


class ElementRepeated(InputError):
    def __init__(self, s: int, x: int):
        self.s, self.x = s, x
        super().__init__(f"element {x} appears twice in the partition of element {s}")


class ElementMissing(InputError):
    def __init__(self, s: int, x: int):
        self.s, self.x = s, x
        super().__init__(f"element {x} is not assigned a class in the partition of element {s}")


class SelfInClass(InputError):
    def __init__(self, s: int):
        self.s = s
        super().__init__(f"element {s} appears in its own partition")


class EmptyClass(InputError):
    def __init__(self, s: int):
        self.s = s
        super().__init__(f"the partition of element {s} contains an empty class")


class InvalidPartition(InputError):
    pass


# Computation errors

class NotReflectless(ComputationError):
    def __init__(self, s: int, x: int, y: int):
        self.triple = (s, x, y)
        super().__init__(f"({s}|{x}{y}) is not a reflectless triple")


class EmptySet(ComputationError):
    def __init__(self, what: str = "set"):
        super().__init__(f"{what} must be nonempty")


class PartNotHomogeneous(ComputationError):
    def __init__(self, index: int, splitters: Sequence[int] = ()):
        self.index = index
        self.splitters = tuple(splitters)
        super().__init__(f"part {index} is not a homogeneous set (split by {list(self.splitters)})")


class QuotientNotWellDefined(ComputationError):
    def __init__(self, part: int, element: int):
        self.part = part
        self.element = element
        super().__init__(
            f"element {element} of part {part} does not see the other parts like the representative"
        )


class BadK(ComputationError):
    def __init__(self, k: int):
        self.k = k
        super().__init__(f"distance bound k must be >= 1, got {k}")


class PivotInside(ComputationError):
    def __init__(self, y: int):
        self.y = y
        super().__init__(f"pivot {y} belongs to the set being partitioned")


class OverlappingSets(ComputationError):
    def __init__(self, a: Sequence[int], b: Sequence[int]):
        self.sets = (sorted(a), sorted(b))
        super().__init__(f"sets {self.sets[0]} and {self.sets[1]} overlap")


class NotWeaklyPartitive(ComputationError):
    def __init__(self, members: Sequence[int], message: str = ""):
        self.members = sorted(members)
        super().__init__(f"node {self.members} fits no prime/degenerate/linear shape {message}".rstrip())


class ClosureViolation(ComputationError):
    def __init__(self, a: Sequence[int], b: Sequence[int]):
        self.sets = (sorted(a), sorted(b))
        super().__init__(
            f"union of overlapping sets {self.sets[0]} and {self.sets[1]} is not homogeneous"
        )


class TooLarge(ComputationError):
    def __init__(self, n: int, limit: int, what: str = "oracle"):
        self.n = n
        self.limit = limit
        super().__init__(f"{what} supports at most {limit} elements, got {n}")
