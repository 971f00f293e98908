import pytest
from hypothesis import given, strategies as st

from src.algorithms import RefinementStats, is_trivial, mhs, partition_by_pivot_classes, refine_by_set, shs
from src.errors import EmptySet, PivotInside
from src.instances import Graph, from_directed, from_undirected
from src.oracle import brute_is_trivial, brute_mhs, brute_shs
from src.partition import RefinablePartition
from src.relation_core import SetFamily, is_homogeneous_set
from strategies import graphs, relations


def test_shs_g1(g1_rel):
    assert shs(g1_rel, {0, 2}) == frozenset(range(4))
    assert shs(g1_rel, {0, 1}) == frozenset({0, 1})
    assert shs(g1_rel, {0, 3}) == frozenset({0, 1, 3})
    assert shs(g1_rel, {2}) == frozenset({2})


def test_shs_of_empty_set_fails(g1_rel):
    with pytest.raises(EmptySet):
        shs(g1_rel, set())


def test_mhs_g1(g1_rel):
    assert mhs(g1_rel, 3) == SetFamily([[0, 1], [2]])
    assert mhs(g1_rel, 0) == SetFamily([[1], [2], [3]])
    assert mhs(g1_rel, 2) == SetFamily([[0, 1, 3]])


def test_mhs_complete_graph(k3_rel):
    assert mhs(k3_rel, 0) == SetFamily([[1, 2]])


def test_mhs_single_element():
    r = from_undirected(Graph.undirected(1, []))
    assert mhs(r, 0) == SetFamily()


def test_is_trivial(g1_rel, k4_rel, p4_rel):
    assert not is_trivial(g1_rel)
    assert not is_trivial(k4_rel)
    assert is_trivial(p4_rel)


def test_partition_by_pivot_classes(g1_rel):
    parts = partition_by_pivot_classes([0, 1, 2], 3, g1_rel)
    assert sorted(map(sorted, parts)) == [[0, 1], [2]]
    with pytest.raises(PivotInside):
        partition_by_pivot_classes([0, 3], 3, g1_rel)


def test_refine_by_set_returns_the_partition():
    p = RefinablePartition([[0, 1, 2]])
    same, splits = refine_by_set(p, [2])
    assert same is p
    assert len(splits) == 1


@given(relations(min_n=1, max_n=7), st.data())
def test_shs_matches_oracle(r, data):
    S = data.draw(st.sets(st.integers(0, r.n - 1), min_size=1, max_size=3))
    result = shs(r, S)
    assert result == brute_shs(r, S)
    assert is_homogeneous_set(r, result)


@given(relations(min_n=2, max_n=7), st.data())
def test_mhs_matches_oracle(r, data):
    x = data.draw(st.integers(0, r.n - 1))
    family = mhs(r, x)
    assert family == brute_mhs(r, x)
    covered = sorted(v for part in family for v in part)
    assert covered == [v for v in range(r.n) if v != x]


@given(graphs(max_n=7))
def test_is_trivial_matches_oracle_on_graphs(g):
    r = from_undirected(g)
    assert is_trivial(r) == brute_is_trivial(r)


@given(relations(max_n=7))
def test_is_trivial_matches_oracle(r):
    assert is_trivial(r) == brute_is_trivial(r)


@given(relations(min_n=2, max_n=8), st.data())
def test_mhs_does_not_depend_on_element_order(r, data):
    x = data.draw(st.integers(0, r.n - 1))
    order = data.draw(st.permutations(list(range(r.n))))
    assert mhs(r, x, order=order) == mhs(r, x)


@given(graphs(min_n=2, max_n=12, directed=True), st.data())
def test_mhs_charges_each_pivot_pair_once(g, data):
    r = from_directed(g)
    x = data.draw(st.integers(0, r.n - 1))
    stats = RefinementStats()
    mhs(r, x, stats=stats)
    assert stats.pivot_charges <= (r.n - 1) * (r.n - 2)
    assert stats.rounds >= 1
