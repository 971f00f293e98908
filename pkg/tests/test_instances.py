import pytest
from hypothesis import given

from src.errors import (BadK, ClosureViolation, DuplicateEdge, IncompleteColoring, IndexOutOfRange, MalformedGraph,
                        NotBipartite, ParseError)
from src.instances import (BimoduleInstance, Graph, GraphKind, PathMode, distance_k_relation, from_directed,
                           from_two_structure, from_undirected, parse_graph, path_avoiding_relation,
                           serialize_graph, two_structure_of)
from src.oracle import brute_bimodules, enumerate_homogeneous_sets
from src.relation_core import SetFamily, holds
from strategies import G1_TEXT, bipartite_graphs, graphs


def test_parse_g1(g1):
    assert parse_graph(G1_TEXT) == g1
    assert parse_graph(G1_TEXT.encode()) == g1


def test_parse_with_comments_and_blank_lines():
    text = "# triangle\n3 3 undirected\n\n0 1  # first\n1 2\n0 2\n"
    g = parse_graph(text)
    assert g.edges == ((0, 1), (0, 2), (1, 2))


@pytest.mark.parametrize("text, error, line", [
    ("2 1 undirected\n0 5\n", IndexOutOfRange, 2),
    ("3 2 undirected\n0 1\n1 0\n", DuplicateEdge, 3),
    ("3 2 undirected\n0 1\n", ParseError, 2),
    ("3 1 sideways\n0 1\n", ParseError, 1),
    ("3 1 undirected\n0 x\n", ParseError, 2),
    ("3 1 undirected\n1 1\n", ParseError, 2),
    ("3 1 undirected\n0 1 2\n", ParseError, 2),
    ("", ParseError, 1),
])
def test_parse_errors_carry_line_numbers(text, error, line):
    with pytest.raises(error) as exc:
        parse_graph(text)
    assert exc.value.line == line


def test_parse_directed_allows_both_arcs():
    g = parse_graph("2 2 directed\n0 1\n1 0\n")
    assert g.edges == ((0, 1), (1, 0))


def test_parse_bipartite():
    g = parse_graph("4 2 bipartite\ncolors: 0 1\n0 2\n1 3\n")
    assert g.kind == GraphKind.BIPARTITE
    assert g.black == frozenset({0, 1})
    with pytest.raises(NotBipartite):
        parse_graph("4 1 bipartite\ncolors: 0 1\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph("4 1 bipartite\n0 2\n")


def test_parse_two_structure():
    g = parse_graph("3 3 2structure\n0 1 red\n0 2 blue\n1 2 red\n")
    assert g.colors == {(0, 1): "red", (0, 2): "blue", (1, 2): "red"}
    with pytest.raises(IncompleteColoring):
        parse_graph("3 2 2structure\n0 1 red\n0 2 blue\n")


def test_serialize_is_canonical():
    g = parse_graph("3 2 undirected\n2 1\n0 1\n")
    assert serialize_graph(g) == "3 2 undirected\n0 1\n1 2\n"


def test_graph_constructors_validate():
    with pytest.raises(MalformedGraph):
        Graph.undirected(2, [(1, 1)])
    with pytest.raises(MalformedGraph):
        Graph.undirected(0, [])
    with pytest.raises(DuplicateEdge):
        Graph.undirected(3, [(0, 1), (1, 0)])


def test_undirected_relation(g1_rel):
    assert holds(g1_rel, 2, 0, 3)
    assert not holds(g1_rel, 3, 0, 2)


def test_directed_relation_sees_arc_direction():
    r = from_directed(Graph.directed(3, [(0, 1), (2, 0)]))
    # 0 -> 1 and 2 -> 0: 0 sees 1 and 2 differently
    assert not holds(r, 0, 1, 2)
    # a 2-cycle is not the same as a single arc
    r2 = from_directed(Graph.directed(3, [(0, 1), (1, 0), (0, 2)]))
    assert not holds(r2, 0, 1, 2)


def test_two_structure_of_graph_gives_the_same_relation(g1, g1_rel):
    assert from_two_structure(two_structure_of(g1)) == g1_rel


@given(graphs(max_n=6))
def test_distance_one_is_adjacency(g):
    assert distance_k_relation(g, 1) == from_undirected(g)


def test_distance_k_validates_k(g1):
    with pytest.raises(BadK):
        distance_k_relation(g1, 0)


def test_distance_two_on_a_path():
    r = distance_k_relation(Graph.undirected(4, [(0, 1), (1, 2), (2, 3)]), 2)
    assert holds(r, 0, 1, 2)
    assert not holds(r, 0, 1, 3)


def test_path_avoiding_relation_on_p3():
    r = path_avoiding_relation(Graph.undirected(3, [(0, 1), (1, 2)]))
    family = enumerate_homogeneous_sets(r)
    nontrivial = sorted(sorted(X) for X in family if 1 < len(X) < 3)
    assert nontrivial == [[0, 1], [1, 2]]


def test_neighborhood_mode_isolates_neighbours():
    r = path_avoiding_relation(Graph.undirected(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), PathMode.NEIGHBORHOOD)
    # removing 0 and its neighbours 1 and 3 leaves 2 alone
    assert sorted(r.classes(0)) == [[1], [2], [3]]


def test_bimodules_of_complete_bipartite():
    g = Graph.bipartite(4, [0, 1], [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert len(brute_bimodules(g)) == 15
    instance = BimoduleInstance(g)
    assert instance.maximal_sets_avoiding(0) == [frozenset({1, 2, 3})]


def test_bimodules_of_a_star_edge():
    # black 0, white 1 and 2, one edge 0-1
    g = Graph.bipartite(3, [0], [(0, 1)])
    instance = BimoduleInstance(g)
    assert not instance.is_homogeneous_set(frozenset({1, 2}))
    assert instance.splitters(frozenset({1, 2})) == frozenset({0})
    assert instance.is_homogeneous_set(frozenset({0, 1}))
    assert brute_bimodules(g) == SetFamily([[0], [1], [2], [0, 1], [0, 2], [0, 1, 2]])


def test_intersecting_maximal_bimodules_raise():
    # blacks 0 and 1, whites 2 and 3; 1 separates 2 from 3 while 0 is isolated
    g = Graph.bipartite(4, [0, 1], [(1, 2)])
    with pytest.raises(ClosureViolation) as exc:
        BimoduleInstance(g).maximal_sets_avoiding(1)
    assert exc.value.sets == ([0, 2], [0, 3])


def test_bimodule_instance_needs_bipartite(g1):
    with pytest.raises(NotBipartite):
        BimoduleInstance(g1)


@given(bipartite_graphs(max_n=7))
def test_bimodule_splitters_match_oracle(g):
    instance = BimoduleInstance(g)
    family = brute_bimodules(g)
    for mask in range(1, 2 ** g.n):
        X = frozenset(i for i in range(g.n) if mask >> i & 1)
        assert instance.is_homogeneous_set(X) == (X in family)
