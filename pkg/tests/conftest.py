import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from src.generators import transitive_tournament
from src.instances import Graph, from_directed, from_undirected
from src.relation_core import Relation, build_relation

hypothesis_settings.register_profile(
    "homodec", derandomize=True, max_examples=100, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
hypothesis_settings.load_profile("homodec")


@pytest.fixture
def g1() -> Graph:
    return Graph.undirected(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


@pytest.fixture
def g1_rel(g1) -> Relation:
    return from_undirected(g1)


@pytest.fixture
def k3_rel() -> Relation:
    return from_undirected(Graph.undirected(3, [(0, 1), (1, 2), (0, 2)]))


@pytest.fixture
def k4_rel() -> Relation:
    return from_undirected(Graph.undirected(4, [(u, v) for u in range(4) for v in range(u + 1, 4)]))


@pytest.fixture
def p4_rel() -> Relation:
    return from_undirected(Graph.undirected(4, [(0, 1), (1, 2), (2, 3)]))


@pytest.fixture
def tournament3_rel() -> Relation:
    return from_directed(transitive_tournament(3))


@pytest.fixture
def bad_rel() -> Relation:
    """
    Relation violating A2 and A3: {2,3} and {0,1,2} are homogeneous and
    overlap, but their difference {0,1} is split by 2.
    """
    return build_relation(4, [
        [[1], [2, 3]],
        [[0], [2, 3]],
        [[0], [1], [3]],
        [[0, 1, 2]],
    ])
