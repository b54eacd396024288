import math
from typing import Any

import networkx as nx
from pydantic import PrivateAttr

from aoiroute.graph.Edge import Edge
from aoiroute.graph.graph_error import (
    DuplicateEdgeError,
    GraphError,
    NodeOutOfRangeError,
    NonPositiveLengthError,
    SelfLoopError,
)
from aoiroute.model.Model import Model


class Graph(Model):
    """Simple undirected weighted graph with nodes 0..node_count-1.

    Edge ids equal edge positions in the edges list.

    Raises:
        SelfLoopError:
            Some edge starts and ends at the same node.
        DuplicateEdgeError:
            Two edges share the same unordered node pair.
        NonPositiveLengthError:
            Some length is not a positive finite number.
        NodeOutOfRangeError:
            Some edge end is not in 0..node_count-1.
    """
    node_count: int
    edges: list[Edge]

    _edge_by_pair: dict[tuple[int, int], Edge] = PrivateAttr(
        default_factory=dict
    )
    _incident: list[list[Edge]] = PrivateAttr(default_factory=list)

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)

        if self.node_count < 1:
            raise GraphError(
                f"node count {self.node_count} should be positive"
            )

        self._incident = [[] for _ in range(self.node_count)]
        for i, edge in enumerate(self.edges):
            if edge.id != i:
                raise GraphError(
                    f"edge at position {i} has id {edge.id}"
                )
            for node in (edge.u, edge.v):
                if node < 0 or node >= self.node_count:
                    raise NodeOutOfRangeError(node, self.node_count)
            if edge.u == edge.v:
                raise SelfLoopError(edge.u)
            if not math.isfinite(edge.length) or edge.length <= 0:
                raise NonPositiveLengthError(edge.u, edge.v, edge.length)
            if edge.pair in self._edge_by_pair:
                raise DuplicateEdgeError(edge.u, edge.v)

            self._edge_by_pair[edge.pair] = edge
            self._incident[edge.u].append(edge)
            self._incident[edge.v].append(edge)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def total_length(self) -> float:
        return math.fsum(e.length for e in self.edges)

    def find_edge(self, a: int, b: int) -> Edge | None:
        return self._edge_by_pair.get((min(a, b), max(a, b)), None)

    def incident(self, v: int) -> list[Edge]:
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self._incident[v])

    def odd_nodes(self) -> list[int]:
        return [
            v for v in range(self.node_count) if self.degree(v) % 2 == 1
        ]

    def scaled(self, factor: float) -> "Graph":
        """Returns the same graph with every length multiplied by factor."""
        return Graph(
            node_count=self.node_count,
            edges=[
                Edge(id=e.id, u=e.u, v=e.v, length=e.length * factor)
                for e in self.edges
            ]
        )

    def to_networkx(self) -> nx.Graph:
        nx_graph: nx.Graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.node_count))
        for e in self.edges:
            nx_graph.add_edge(e.u, e.v, length=e.length, id=e.id)
        return nx_graph

    class Config:
        allow_mutation = False
        copy_on_model_validation = "none"
