"""Walking a route over a graph: steps, lengths and edge classification."""
import math
from collections import Counter
from typing import NamedTuple

from aoiroute.aoi.aoi_error import (
    NotAWalkError,
    NotClosedWalkError,
    NotInF1Error,
)
from aoiroute.aoi.Route import Route
from aoiroute.graph.Edge import Edge
from aoiroute.graph.Graph import Graph


class Step(NamedTuple):
    edge: Edge
    is_forward: bool


class Classification(NamedTuple):
    """Partition of graph edges by the number of traversals."""
    once: frozenset[int]
    twice: frozenset[int]


def walk_steps(g: Graph, r: Route) -> list[Step]:
    """Converts route nodes into traversed edges with directions.

    Raises:
        NotClosedWalkError:
            First node differs from the last one.
        NotAWalkError:
            Some consecutive nodes are not adjacent in g.
    """
    if not r.is_closed:
        raise NotClosedWalkError(f"route {r.format()} is not closed")

    steps: list[Step] = []
    for a, b in zip(r.nodes, r.nodes[1:]):
        if a >= g.node_count or b >= g.node_count:
            raise NotAWalkError(
                f"route {r.format()} visits node outside of the graph"
            )
        edge: Edge | None = g.find_edge(a, b)
        if edge is None:
            raise NotAWalkError(f"no edge between {a} and {b}")
        steps.append(Step(edge, edge.is_forward(a)))
    return steps


def route_length(g: Graph, r: Route) -> float:
    return math.fsum(step.edge.length for step in walk_steps(g, r))


def traversal_counts(g: Graph, r: Route) -> Counter[int]:
    return Counter(step.edge.id for step in walk_steps(g, r))


def classify_route(g: Graph, r: Route) -> Classification:
    """Splits graph edges into traversed once and traversed twice.

    Raises:
        NotClosedWalkError, NotAWalkError:
            Route is not a closed walk on g.
        NotInF1Error:
            Some edge is traversed zero times or more than twice.
    """
    counts: Counter[int] = traversal_counts(g, r)

    once: set[int] = set()
    twice: set[int] = set()
    for edge in g.edges:
        count: int = counts.get(edge.id, 0)
        if count == 1:
            once.add(edge.id)
        elif count == 2:
            twice.add(edge.id)
        else:
            raise NotInF1Error(
                f"edge ({edge.u}, {edge.v}) is traversed {count} times"
            )

    return Classification(frozenset(once), frozenset(twice))


def edge_set_length(g: Graph, edge_ids: frozenset[int]) -> float:
    return math.fsum(g.edges[i].length for i in edge_ids)
