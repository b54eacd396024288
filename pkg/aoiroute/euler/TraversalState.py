from typing import NamedTuple

from aoiroute.aoi.Route import Route
from aoiroute.graph.Edge import Edge, EdgeCopy
from aoiroute.graph.MultiGraph import MultiGraph


class Candidate(NamedTuple):
    """Untraversed edge copy leaving the current node towards neighbor."""
    neighbor: int
    copy_id: int
    edge: Edge


class TraversalState:
    """Mutable state of a walk building an Eulerian cycle.

    Tracks the partial route, untraversed copies and, per edge, how many of
    its copies are traversed and the route-length coordinate at which its
    latest traversal finished.

    Attributes:
        multigraph:
            Walked multigraph.
        source:
            Start and end node of the cycle.
        total_length:
            l(E'') of the multigraph.
    """
    def __init__(self, multigraph: MultiGraph, source: int) -> None:
        self.multigraph: MultiGraph = multigraph
        self.source: int = source
        self.total_length: float = multigraph.total_length

        self.__untraversed: list[dict[int, list[EdgeCopy]]] = [
            {} for _ in range(multigraph.node_count)
        ]
        for edge_copy in multigraph.copies():
            edge: Edge = edge_copy.edge
            self.__untraversed[edge.u].setdefault(edge.v, []).append(
                edge_copy
            )
            self.__untraversed[edge.v].setdefault(edge.u, []).append(
                edge_copy
            )
        self.__remaining: int = multigraph.copy_count

        self.__nodes: list[int] = [source]
        self.__route_length: float = 0.0
        self.__traversed: dict[int, int] = {}
        self.__last_completion: dict[int, float] = {}

    @property
    def current(self) -> int:
        return self.__nodes[-1]

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(self.__nodes)

    @property
    def route_length(self) -> float:
        return self.__route_length

    @property
    def remaining(self) -> int:
        return self.__remaining

    @property
    def is_complete(self) -> bool:
        return self.__remaining == 0

    def multiplicity(self, edge_id: int) -> int:
        return self.multigraph.multiplicity[edge_id]

    def traversed_count(self, edge_id: int) -> int:
        return self.__traversed.get(edge_id, 0)

    def last_completion(self, edge_id: int) -> float | None:
        return self.__last_completion.get(edge_id, None)

    def tau(self, edge_id: int) -> float:
        """Route length walked since the latest traversal of the edge
        finished.

        Raises:
            ValueError:
                Edge has not been traversed yet.
        """
        completion: float | None = self.last_completion(edge_id)
        if completion is None:
            raise ValueError(f"edge {edge_id} has not been traversed yet")
        return self.__route_length - completion

    def untraversed_neighbors(self, v: int) -> dict[int, list[EdgeCopy]]:
        return self.__untraversed[v]

    def untraversed_incident(self, v: int) -> list[Candidate]:
        return [
            Candidate(neighbor, edge_copy.copy_id, edge_copy.edge)
            for neighbor, copies in sorted(self.__untraversed[v].items())
            for edge_copy in copies
        ]

    def traverse(self, candidate: Candidate) -> None:
        """Moves along given copy from the current node.

        Raises:
            ValueError:
                Copy is not untraversed or does not leave the current node.
        """
        v: int = self.current
        u: int = candidate.neighbor
        copies: list[EdgeCopy] | None = self.__untraversed[v].get(u)
        if not copies or all(c.copy_id != candidate.copy_id for c in copies):
            raise ValueError(
                f"copy {candidate.copy_id} does not leave node {v}"
                " untraversed"
            )

        self.__remove_copy(v, u, candidate.copy_id)
        self.__remove_copy(u, v, candidate.copy_id)
        self.__remaining -= 1

        edge_id: int = candidate.edge.id
        self.__route_length += candidate.edge.length
        self.__traversed[edge_id] = self.traversed_count(edge_id) + 1
        self.__last_completion[edge_id] = self.__route_length
        self.__nodes.append(u)

    def route(self) -> Route:
        return Route(nodes=tuple(self.__nodes))

    def __remove_copy(self, a: int, b: int, copy_id: int) -> None:
        copies: list[EdgeCopy] = self.__untraversed[a][b]
        copies[:] = [c for c in copies if c.copy_id != copy_id]
        if not copies:
            del self.__untraversed[a][b]
