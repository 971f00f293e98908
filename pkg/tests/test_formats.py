import json

import pytest

from src.errors import ElementMissing, ParseError
from src.formats import dump_relation, load_input, parse_relation, relation_document
from src.instances import Graph
from strategies import G1_TEXT

G1_JSON = json.dumps({"n": 4, "classes": [[[1, 2], [3]], [[0, 2], [3]], [[0, 1, 3]], [[0, 1], [2]]]})


def test_class_document(g1_rel):
    assert parse_relation(G1_JSON) == g1_rel
    assert relation_document(g1_rel).classes == [[[1, 2], [3]], [[0, 2], [3]], [[0, 1, 3]], [[0, 1], [2]]]


def test_dump_is_compact_json(g1_rel):
    text = dump_relation(g1_rel)
    assert text.endswith("\n")
    assert parse_relation(text.encode()) == g1_rel


def test_triple_document(k3_rel):
    triples = [[s, x, y] for s in range(3) for x in range(3) for y in range(3) if len({s, x, y}) == 3]
    assert parse_relation(json.dumps({"n": 3, "triples": triples})) == k3_rel


@pytest.mark.parametrize("text", [
    "{not json",
    "[1, 2]",
    '{"n": 0, "classes": []}',
    '{"n": 2, "classes": "no"}',
])
def test_malformed_documents(text):
    with pytest.raises(ParseError):
        parse_relation(text)


def test_document_must_partition_each_complement():
    with pytest.raises(ElementMissing):
        parse_relation('{"n": 3, "classes": [[[1]], [[0, 2]], [[0, 1]]]}')


def test_load_input_detects_the_format(g1, g1_rel):
    assert load_input(G1_TEXT) == g1
    assert load_input("\n  " + G1_JSON) == g1_rel
    assert isinstance(load_input(G1_TEXT.encode()), Graph)
