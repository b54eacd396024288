"""Eulerian multigraphs built from simple graphs."""
from collections import Counter
from enum import Enum

from aoiroute.cpp.matching import Matching, min_weight_perfect_matching
from aoiroute.cpp.MatchingConfig import MatchingConfig
from aoiroute.cpp.ShortestPathTable import ShortestPathTable, apsp
from aoiroute.graph.Edge import Edge
from aoiroute.graph.Graph import Graph
from aoiroute.graph.graph_error import DisconnectedGraphError
from aoiroute.graph.MultiGraph import MultiGraph
from aoiroute.graph.structure import is_connected
from aoiroute.log.Log import Log


class AugmentKind(Enum):
    DUP = "dup"
    CPP = "cpp"


def check_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph should be connected")


def duplicate_all(g: Graph) -> MultiGraph:
    """Doubles every edge, the result is always Eulerian.

    Raises:
        DisconnectedGraphError:
            Graph is not connected.
    """
    check_connected(g)
    return MultiGraph.from_duplicated(g, {e.id for e in g.edges})


def cpp_augment(
    g: Graph,
    *,
    table: ShortestPathTable | None = None,
    config: MatchingConfig | None = None
) -> MultiGraph:
    """Doubles edges on shortest paths between matched odd nodes.

    If matched paths share an edge, its added copies cancel in pairs, so
    multiplicity never exceeds 2 and degree parities are kept.

    Raises:
        DisconnectedGraphError:
            Graph is not connected.
        TooManyOddNodesError:
            Exact matching cap exceeded.
    """
    check_connected(g)
    odd: list[int] = g.odd_nodes()
    if not odd:
        return MultiGraph.from_duplicated(g, set())

    if table is None:
        table = apsp(g)
    matching: Matching = min_weight_perfect_matching(
        odd, table, config=config
    )

    added: Counter[int] = Counter()
    for a, b in matching.pairs:
        path: tuple[int, ...] = table.path(a, b)
        for x, y in zip(path, path[1:]):
            edge: Edge | None = g.find_edge(x, y)
            if edge is None:
                raise ValueError(f"path {path} leaves the graph")
            added[edge.id] += 1

    duplicated: set[int] = {
        edge_id for edge_id, count in added.items() if count % 2 == 1
    }
    if any(count > 1 for count in added.values()):
        Log.bind(matching=matching.pairs).warning(
            "matched shortest paths overlap, cancelled shared copies"
        )
    Log.debug(
        f"cpp matching of {len(odd)} odd nodes costs {matching.total_cost},"
        f" doubles {len(duplicated)} edges"
    )
    return MultiGraph.from_duplicated(g, duplicated)


def augment(
    g: Graph,
    kind: AugmentKind,
    *,
    table: ShortestPathTable | None = None
) -> MultiGraph:
    match kind:
        case AugmentKind.DUP:
            return duplicate_all(g)
        case AugmentKind.CPP:
            return cpp_augment(g, table=table)
        case _:
            raise ValueError(f"unknown augment kind {kind}")
