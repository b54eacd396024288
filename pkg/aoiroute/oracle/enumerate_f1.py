"""Duplication subsets turning a graph into an Eulerian multigraph."""
from aoiroute.cpp.augment import check_connected
from aoiroute.graph.Graph import Graph
from aoiroute.graph.MultiGraph import MultiGraph
from aoiroute.log.Log import Log
from aoiroute.oracle.oracle_error import BudgetExceededError
from aoiroute.oracle.OracleConfig import OracleConfig


def enumerate_f1_multigraphs(
    g: Graph,
    *,
    config: OracleConfig | None = None
) -> list[MultiGraph]:
    """Lists every multigraph g + S, S a subset of edges, with all degrees
    even.

    Every route traversing each edge once or twice is an Eulerian cycle of
    exactly one of them. Subsets are listed in ascending bitmask order, bit
    i standing for edge i.

    Raises:
        DisconnectedGraphError:
            Graph is not connected.
        BudgetExceededError:
            Graph has more edges than OracleConfig.max_edges.
    """
    if config is None:
        config = OracleConfig.load()
    check_connected(g)
    if g.edge_count > config.max_edges:
        raise BudgetExceededError(
            f"{g.edge_count} edges exceed the enumeration cap"
            f" {config.max_edges}"
        )

    odd_mask: int = 0
    for v in g.odd_nodes():
        odd_mask |= 1 << v
    ends: list[int] = [(1 << e.u) | (1 << e.v) for e in g.edges]

    # boundary[mask]: nodes of odd degree within the subset
    boundary: list[int] = [0] * (1 << g.edge_count)
    multigraphs: list[MultiGraph] = []
    for mask in range(1 << g.edge_count):
        if mask:
            lowest: int = (mask & -mask).bit_length() - 1
            boundary[mask] = boundary[mask & (mask - 1)] ^ ends[lowest]
        if boundary[mask] == odd_mask:
            multigraphs.append(MultiGraph.from_duplicated(
                g,
                {i for i in range(g.edge_count) if mask >> i & 1}
            ))

    Log.debug(
        f"{len(multigraphs)} duplication subsets of {g.edge_count} edges"
        " make the graph Eulerian"
    )
    return multigraphs


def count_bound(g: Graph) -> int:
    """Lower bound 2^(1 - n(V) + 2·n(E)) on the number of copy-distinct
    Eulerian cycles of the fully doubled graph from a fixed start.

    Returns 0 when the exponent is negative, i.e. for graphs too sparse to
    be connected.
    """
    exponent: int = 1 - g.node_count + 2 * g.edge_count
    if exponent < 0:
        return 0
    return 2 ** exponent
