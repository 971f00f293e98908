import logging
import threading
from typing import List, Tuple, Union

from src.axioms import AxiomReport
from src.config import settings
from src.formats import load_input
from src.generators import Model, generate
from src.instances import Graph, serialize_graph
from src.pipeline import (InstanceKind, TypingMode, decompose, query_mhs, query_shs, query_trivial, relation_of,
                          run_checks)
from src.relation_core import Relation
from src.strong_tree import StrongTree

logger = logging.getLogger(__name__)


class _Counted:
    def __init__(self):
        self.calls = 0
        self._lock = threading.Lock()

    def _count(self):
        with self._lock:
            self.calls += 1


class DecompositionService(_Counted):
    """
    Service for decomposing graphs and relations
    """

    def load(self, text: Union[str, bytes]) -> Union[Graph, Relation]:
        return load_input(text)

    def decompose(self, text: Union[str, bytes], kind: InstanceKind = InstanceKind.AUTO,
                  type_nodes: TypingMode = TypingMode.ON, k: int = 2) -> StrongTree:
        """
        Strong-set tree of an edge list or relation document
        """
        self._count()
        tree = decompose(self.load(text), kind=kind, typing=type_nodes, k=k, threads=settings.threads)
        logger.info("decomposition %d: n=%d", self.calls, tree.n)
        return tree


class QueryService(_Counted):
    """
    Service for homogeneous-set queries on a relation
    """

    def _relation(self, text: str, kind: InstanceKind, k: int) -> Relation:
        self._count()
        return relation_of(load_input(text), kind=kind, k=k)

    def shs(self, text: str, ids: List[int], kind: InstanceKind = InstanceKind.AUTO, k: int = 2) -> List[int]:
        return query_shs(self._relation(text, kind, k), ids)

    def mhs(self, text: str, x: int, kind: InstanceKind = InstanceKind.AUTO, k: int = 2) -> List[List[int]]:
        return query_mhs(self._relation(text, kind, k), x)

    def trivial(self, text: str, kind: InstanceKind = InstanceKind.AUTO, k: int = 2) -> bool:
        return query_trivial(self._relation(text, kind, k))


class CheckService(_Counted):
    """
    Service for axiom, closure, submodularity and oracle checks
    """

    def run(self, text: str, **options) -> List[AxiomReport]:
        self._count()
        return run_checks(load_input(text), **options)


class GeneratorService(_Counted):
    """
    Service for seeded random instances
    """

    def generate(self, model: Model, n: int, p: float = 0.5, seed: int = 0, colors: int = 2,
                 directed: bool = False) -> Tuple[Graph, str]:
        self._count()
        g = generate(model, n, p=p, seed=seed, colors=colors, directed=directed)
        return g, serialize_graph(g)
