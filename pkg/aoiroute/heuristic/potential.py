from aoiroute.cpp.ShortestPathTable import ShortestPathTable
from aoiroute.euler.TraversalState import Candidate, TraversalState


def potential(
    state: TraversalState,
    candidate: Candidate,
    table: ShortestPathTable,
    epsilon: float
) -> float:
    """Scores an eligible copy leaving the current node, higher is better.

    Edges appearing once get ½·l(E'') whatever the state. A doubled edge
    traversed once gets l(e) + τ, so a copy is preferred the longer ago its
    twin was left. An untraversed doubled edge gets
    max(½·l(E'') + epsilon, l(R̄) + l(e) + dist(u, source)), postponing
    its first visit.

    Args:
        state:
            Current traversal state.
        candidate:
            Copy to score.
        table:
            Shortest paths of the simple graph, for dist(u, source).
        epsilon:
            Margin of the untraversed doubled case.
    """
    half_length: float = 0.5 * state.total_length
    edge_id: int = candidate.edge.id
    if state.multiplicity(edge_id) == 1:
        return half_length

    if state.traversed_count(edge_id) == 1:
        return candidate.edge.length + state.tau(edge_id)

    return max(
        half_length + epsilon,
        state.route_length
            + candidate.edge.length
            + table.distance(candidate.neighbor, state.source)
    )
