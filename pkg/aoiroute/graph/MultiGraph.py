import math
from typing import Any

from pydantic import PrivateAttr

from aoiroute.graph.Edge import EdgeCopy, make_copy_id
from aoiroute.graph.Graph import Graph
from aoiroute.graph.graph_error import GraphError
from aoiroute.model.Model import Model


class MultiGraph(Model):
    """Graph whose edges appear once or twice.

    Multiplicity 2 means two parallel copies with distinct copy ids, see
    make_copy_id.
    """
    base: Graph
    multiplicity: dict[int, int]

    _degrees: list[int] = PrivateAttr(default_factory=list)

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)

        edge_ids: set[int] = {e.id for e in self.base.edges}
        if set(self.multiplicity.keys()) != edge_ids:
            raise GraphError(
                "multiplicity should be given for every edge of the base"
                " graph and only for them"
            )
        for edge_id, count in self.multiplicity.items():
            if count not in (1, 2):
                raise GraphError(
                    f"edge {edge_id} has multiplicity {count}, expected 1"
                    " or 2"
                )

        self._degrees = [0] * self.base.node_count
        for e in self.base.edges:
            count: int = self.multiplicity[e.id]
            self._degrees[e.u] += count
            self._degrees[e.v] += count

    @classmethod
    def from_duplicated(
        cls, base: Graph, duplicated: set[int] | frozenset[int]
    ) -> "MultiGraph":
        """Creates multigraph with given edge ids doubled."""
        return cls(
            base=base,
            multiplicity={
                e.id: 2 if e.id in duplicated else 1 for e in base.edges
            }
        )

    @property
    def node_count(self) -> int:
        return self.base.node_count

    @property
    def copy_count(self) -> int:
        return sum(self.multiplicity.values())

    @property
    def total_length(self) -> float:
        return math.fsum(
            e.length * self.multiplicity[e.id] for e in self.base.edges
        )

    @property
    def duplicated(self) -> frozenset[int]:
        return frozenset(
            edge_id for edge_id, count in self.multiplicity.items()
            if count == 2
        )

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def odd_nodes(self) -> list[int]:
        return [v for v, d in enumerate(self._degrees) if d % 2 == 1]

    def copies(self) -> list[EdgeCopy]:
        return [
            EdgeCopy(make_copy_id(e.id, i), e)
            for e in self.base.edges
            for i in range(self.multiplicity[e.id])
        ]

    def incident_copies(self, v: int) -> list[EdgeCopy]:
        return [
            EdgeCopy(make_copy_id(e.id, i), e)
            for e in self.base.incident(v)
            for i in range(self.multiplicity[e.id])
        ]

    class Config:
        allow_mutation = False
