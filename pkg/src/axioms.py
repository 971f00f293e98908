"""
Checkers for the properties a homogeneous relation may satisfy.

Every check returns an AxiomReport. A failing report carries the first
counterexample in lexicographic order of the witness tuple, which can be
replayed through ``holds``:

- A1, A4: witness (x, y, z)
- A2, A3: witness (s, t, x, y)
- base:   (s, x, y) for symmetry, (s, x, y, z) for transitivity
- submodularity and closure: the pair of sets (X, Y)
"""
import logging
from enum import Enum
from typing import List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from src.algorithms import is_trivial, mhs, shs
from src.config import settings
from src.errors import IndexOutOfRange, InvalidPartition, TooLarge
from src.instances import BimoduleInstance
from src.oracle import (brute_is_trivial, brute_mhs, brute_shs, brute_strong_bimodules, brute_strong_sets,
                        enumerate_homogeneous_sets)
from src.relation_core import Relation, SetFamily, splitter_count
from src.strong_tree import strong_sets

logger = logging.getLogger(__name__)


class Axiom(str, Enum):
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"


class ClosureLevel(str, Enum):
    WEAKLY_PARTITIVE = "weakly_partitive"
    PARTITIVE = "partitive"


class SubmodularMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


class AxiomReport(BaseModel):
    """Outcome of one check"""
    axiom: str = Field(..., description="Checked property")
    holds: bool = Field(..., description="Whether the property holds")
    witness: Optional[List[Union[int, List[int]]]] = Field(None, description="First counterexample")


class RawTriples(BaseModel):
    """Relation given as the explicit list of triples (s, x, y) with H(s|xy)"""
    n: int = Field(..., ge=1, description="Number of elements")
    triples: List[Tuple[int, int, int]] = Field(default_factory=list, description="Triples s, x, y")


def _triple_tensor(raw: RawTriples) -> np.ndarray:
    n = raw.n
    h = np.zeros((n, n, n), dtype=bool)
    for s, x, y in raw.triples:
        for v in (s, x, y):
            if not 0 <= v < n:
                raise IndexOutOfRange(v, n)
        if s in (x, y):
            raise InvalidPartition(f"triple ({s}|{x}{y}) is not reflectless")
        h[s, x, y] = True
    # H(s|xx) holds for every x != s
    idx = np.arange(n)
    h[:, idx, idx] = True
    h[idx, idx, :] = False
    h[idx, :, idx] = False
    return h


def _first(violations: np.ndarray) -> Optional[List[int]]:
    hits = np.argwhere(violations)
    if hits.size == 0:
        return None
    return [int(v) for v in hits[0]]


def check_base(r: Union[Relation, RawTriples]) -> AxiomReport:
    """Symmetry and transitivity of every H_s, reflexivity being implied."""
    if isinstance(r, Relation):
        return AxiomReport(axiom="base", holds=True)

    h = _triple_tensor(r)
    n = r.n
    asymmetric = h & ~h.transpose(0, 2, 1)
    witness = _first(asymmetric)
    if witness is not None:
        return AxiomReport(axiom="base", holds=False, witness=witness)

    for s in range(n):
        hs = h[s]
        broken = hs[:, :, None] & hs[None, :, :] & ~hs[:, None, :]
        witness = _first(broken)
        if witness is not None:
            return AxiomReport(axiom="base", holds=False, witness=[s] + witness)
    return AxiomReport(axiom="base", holds=True)


def relation_from_triples(raw: RawTriples) -> Relation:
    report = check_base(raw)
    if not report.holds:
        raise InvalidPartition(f"triples are not an equivalence per element, witness {report.witness}")
    h = _triple_tensor(raw)
    # label of x in row s: smallest element equivalent to x
    labels = np.argmax(h, axis=2)
    return Relation.from_labels(labels)


def relation_to_triples(r: Relation) -> RawTriples:
    t = r.table
    same = (t[:, :, None] == t[:, None, :]) & (t[:, :, None] >= 0) & (t[:, None, :] >= 0)
    n = r.n
    idx = np.arange(n)
    same[:, idx, idx] = False
    return RawTriples(n=n, triples=[tuple(int(v) for v in triple) for triple in np.argwhere(same)])


def _pair_holds(row: np.ndarray) -> np.ndarray:
    """[x, y] = H(s|xy) for the row of s; only meaningful off s and the diagonal."""
    return row[:, None] == row[None, :]


def check_axiom(r: Relation, which: Union[Axiom, str]) -> AxiomReport:
    """
    First counterexample to an axiom in lexicographic order, scanning one
    slice of the triple (A1, A4) or quadruple (A2, A3) space at a time so
    memory stays quadratic in n.
    """
    which = Axiom(which)
    n = r.n
    t = r.table
    i = np.arange(n)
    # A1 and A4 are symmetric in x and y, A2 and A3 too
    ordered = i[:, None] < i[None, :]

    if which in (Axiom.A1, Axiom.A4):
        for x in range(n):
            # indices (y, z); m[a, b] = H(a|xb)
            m = t == t[:, [x]]
            h_x_yz = _pair_holds(t[x])
            h_y_xz, h_z_xy = m, m.T
            if which == Axiom.A1:
                violations = h_x_yz & h_y_xz & ~h_z_xy
            else:
                violations = ~h_x_yz & ~h_y_xz & ~h_z_xy
            valid = (i[:, None] > x) & (i[None, :] != x) & (i[:, None] != i[None, :])
            witness = _first(violations & valid)
            if witness is not None:
                return AxiomReport(axiom=which.value, holds=False, witness=[x] + witness)
        return AxiomReport(axiom=which.value, holds=True)

    for s in range(n):
        h_s_xy = _pair_holds(t[s])
        column = t[:, s]
        for u in range(n):
            if u == s:
                continue
            # indices (x, y) with u in the role of t
            h_x_su = column == t[:, u]
            if which == Axiom.A2:
                premise = h_x_su[:, None] & h_x_su[None, :] & _pair_holds(t[u])
            else:
                h_u_sx = t[u] == t[u, s]
                premise = h_x_su[:, None] & h_x_su[None, :] & h_u_sx[:, None] & h_u_sx[None, :]
            outside = (i != s) & (i != u)
            witness = _first(premise & ~h_s_xy & ordered & outside[:, None] & outside[None, :])
            if witness is not None:
                return AxiomReport(axiom=which.value, holds=False, witness=[s, u] + witness)
    return AxiomReport(axiom=which.value, holds=True)


def _splitter_counts(r: Relation) -> np.ndarray:
    """Splitter count of every subset, indexed by bitmask (empty set gets 0)."""
    n = r.n
    counts = np.zeros(2 ** n, dtype=np.int64)
    for mask in range(1, 2 ** n):
        counts[mask] = splitter_count(r, frozenset(i for i in range(n) if mask >> i & 1))
    return counts


def _members(mask: int, n: int) -> List[int]:
    return [i for i in range(n) if mask >> i & 1]


def check_submodularity(r: Relation, mode: Union[SubmodularMode, str] = SubmodularMode.SAMPLED,
                        samples: Optional[int] = None, seed: Optional[int] = None) -> AxiomReport:
    """s(X) + s(Y) >= s(X∪Y) + s(X∩Y) on overlapping pairs, s counting splitters."""
    mode = SubmodularMode(mode)
    n = r.n

    if mode == SubmodularMode.EXHAUSTIVE:
        if n > settings.exhaustive_max_n:
            raise TooLarge(n, settings.exhaustive_max_n, "exhaustive submodularity check")
        counts = _splitter_counts(r)
        masks = np.arange(2 ** n)
        for x in range(1, 2 ** n):
            overlapping = ((masks & x) != 0) & ((masks & ~x) != 0) & ((x & ~masks) != 0)
            broken = overlapping & (counts[x] + counts < counts[x | masks] + counts[x & masks])
            hits = np.flatnonzero(broken)
            if hits.size:
                return AxiomReport(axiom="submodularity", holds=False,
                                   witness=[_members(x, n), _members(int(hits[0]), n)])
        return AxiomReport(axiom="submodularity", holds=True)

    if n < 3:
        return AxiomReport(axiom="submodularity", holds=True)
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    samples = settings.submodular_samples if samples is None else samples
    for _ in range(samples):
        # 0 outside both, 1 X only, 2 Y only, 3 both; one forced element for 1, 2 and 3
        region = rng.integers(0, 4, size=n)
        forced = rng.choice(n, size=3, replace=False)
        region[forced] = [3, 1, 2]
        X = frozenset(np.flatnonzero((region == 1) | (region == 3)).tolist())
        Y = frozenset(np.flatnonzero((region == 2) | (region == 3)).tolist())
        lhs = splitter_count(r, X) + splitter_count(r, Y)
        rhs = splitter_count(r, X | Y) + splitter_count(r, X & Y)
        if lhs < rhs:
            return AxiomReport(axiom="submodularity", holds=False, witness=[sorted(X), sorted(Y)])
    return AxiomReport(axiom="submodularity", holds=True)


def check_family_closure(r: Relation, level: Union[ClosureLevel, str] = ClosureLevel.WEAKLY_PARTITIVE) -> AxiomReport:
    """
    Closure of the homogeneous-set family under union, intersection and
    difference of overlapping members, plus symmetric difference for the
    partitive level.
    """
    level = ClosureLevel(level)
    n = r.n
    family = enumerate_homogeneous_sets(r, max_n=settings.exhaustive_max_n)
    masks = np.array([sum(1 << v for v in X) for X in family], dtype=np.int64)
    member = np.zeros(2 ** n, dtype=bool)
    member[masks] = True

    for a in masks:
        overlapping = ((masks & a) != 0) & ((masks & ~a) != 0) & ((a & ~masks) != 0)
        closed = member[a | masks] & member[a & masks] & member[a & ~masks] & member[masks & ~a]
        if level == ClosureLevel.PARTITIVE:
            closed &= member[a ^ masks]
        hits = np.flatnonzero(overlapping & ~closed)
        if hits.size:
            return AxiomReport(axiom=level.value, holds=False,
                               witness=[_members(int(a), n), _members(int(masks[hits[0]]), n)])
    return AxiomReport(axiom=level.value, holds=True)


def check_against_oracle(structure: Union[Relation, BimoduleInstance]) -> List[AxiomReport]:
    """Fast operations against their brute-force counterparts on a small instance."""
    if not isinstance(structure, Relation):
        expected = brute_strong_bimodules(structure.graph)
        got = strong_sets(structure)
        return [AxiomReport(axiom="oracle:strong_bimodules", holds=got == expected,
                            witness=None if got == expected else _first_difference(got, expected))]

    r = structure
    n = r.n
    if n > settings.exhaustive_max_n:
        raise TooLarge(n, settings.exhaustive_max_n, "oracle comparison")
    reports = []

    witness = next(([x, y] for x in range(n) for y in range(x + 1, n)
                    if shs(r, {x, y}) != brute_shs(r, {x, y})), None)
    reports.append(AxiomReport(axiom="oracle:shs", holds=witness is None, witness=witness))

    witness = next(([x] for x in range(n) if mhs(r, x) != brute_mhs(r, x)), None)
    reports.append(AxiomReport(axiom="oracle:mhs", holds=witness is None, witness=witness))

    agree = is_trivial(r) == brute_is_trivial(r)
    reports.append(AxiomReport(axiom="oracle:trivial", holds=agree))

    got, expected = strong_sets(r), brute_strong_sets(r)
    reports.append(AxiomReport(axiom="oracle:strong_sets", holds=got == expected,
                               witness=None if got == expected else _first_difference(got, expected)))
    return reports


def _first_difference(a: SetFamily, b: SetFamily) -> List[int]:
    """Smallest set in exactly one of two families."""
    differing = set(a.sets) ^ set(b.sets)
    return min((sorted(s) for s in differing), default=[])
