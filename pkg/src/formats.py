"""
Input detection and the relation JSON interchange format.

Relation JSON is either ``{"n": int, "classes": [...]}`` where
``classes[s]`` is the partition of V minus s, or the raw-triple form
``{"n": int, "triples": [[s, x, y], ...]}``. Anything not starting with
``{`` is read as an edge list.
"""
import json
from typing import List, Union

from pydantic import BaseModel, Field, ValidationError

from src.axioms import RawTriples, relation_from_triples
from src.errors import ParseError
from src.instances import Graph, parse_graph
from src.relation_core import Relation, build_relation


class RelationDocument(BaseModel):
    n: int = Field(..., ge=1, description="Number of elements")
    classes: List[List[List[int]]] = Field(..., description="classes[s] is the partition of V minus s")


def relation_document(r: Relation) -> RelationDocument:
    return RelationDocument(n=r.n, classes=r.to_partitions())


def dump_relation(r: Relation) -> str:
    return relation_document(r).model_dump_json() + "\n"


def parse_relation(text: Union[bytes, str]) -> Relation:
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, f"invalid JSON: {e.msg}")
    if not isinstance(data, dict):
        raise ParseError(1, "relation JSON must be an object")
    try:
        if "triples" in data:
            return relation_from_triples(RawTriples.model_validate(data))
        document = RelationDocument.model_validate(data)
    except ValidationError as e:
        raise ParseError(1, f"invalid relation document: {e.errors()[0]['msg']}")
    return build_relation(document.n, document.classes)


def load_input(text: Union[bytes, str]) -> Union[Graph, Relation]:
    """Graph for edge lists, Relation for JSON documents."""
    raw = text.decode("utf-8", errors="replace") if isinstance(text, bytes) else text
    if raw.lstrip().startswith("{"):
        return parse_relation(raw)
    return parse_graph(text)
