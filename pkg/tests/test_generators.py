import pytest

from src.errors import MalformedGraph
from src.generators import (Model, bipartite, generate, gnp, random_digraph, random_relation, tournament,
                            transitive_tournament, two_structure)
from src.instances import GraphKind, serialize_graph


def test_same_seed_same_instance():
    assert gnp(12, 0.3, seed=5) == gnp(12, 0.3, seed=5)
    assert random_digraph(9, 0.4, seed=2) == random_digraph(9, 0.4, seed=2)
    assert random_relation(10, seed=3) == random_relation(10, seed=3)
    assert serialize_graph(two_structure(6, 3, seed=4)) == serialize_graph(two_structure(6, 3, seed=4))


def test_complete_and_empty_graphs():
    assert len(gnp(8, 1.0).edges) == 28
    assert gnp(8, 0.0).edges == ()


def test_tournaments_orient_every_pair_once():
    for g in (tournament(7, seed=1), transitive_tournament(7)):
        assert g.kind == GraphKind.DIRECTED
        assert len(g.edges) == 21
        assert len({frozenset(e) for e in g.edges}) == 21
    assert transitive_tournament(3).edges == ((0, 1), (0, 2), (1, 2))


def test_bipartite_colours_the_first_half_black():
    g = bipartite(7, 0.5, seed=3)
    assert g.black == frozenset({0, 1, 2, 3})
    assert serialize_graph(g).splitlines()[1] == "colors: 0 1 2 3"
    assert all((u in g.black) != (v in g.black) for u, v in g.edges)


def test_two_structure_colours_every_pair():
    g = two_structure(5, colors=3, seed=0)
    assert len(g.colors) == 10
    assert set(g.colors.values()) <= {"c0", "c1", "c2"}
    directed = two_structure(4, seed=0, directed=True)
    assert directed.directed_colors and len(directed.colors) == 12


def test_random_relation_respects_class_bound():
    r = random_relation(15, seed=9, max_classes=2)
    assert all(len(r.classes(s)) <= 2 for s in range(r.n))


@pytest.mark.parametrize("model, kind", [
    (Model.GNP, GraphKind.UNDIRECTED),
    (Model.DIGRAPH, GraphKind.DIRECTED),
    (Model.TOURNAMENT, GraphKind.DIRECTED),
    (Model.TRANSITIVE, GraphKind.DIRECTED),
    (Model.BIPARTITE, GraphKind.BIPARTITE),
    (Model.TWO_STRUCTURE, GraphKind.TWO_STRUCTURE),
])
def test_generate_dispatches_on_model(model, kind):
    assert generate(model, 6, seed=1).kind == kind
    assert generate(model.value, 6, seed=1) == generate(model, 6, seed=1)


@pytest.mark.parametrize("n, p", [(0, 0.5), (5, 1.5), (5, -0.1)])
def test_bad_parameters(n, p):
    with pytest.raises(MalformedGraph):
        gnp(n, p)
