"""Eulerian cycle construction on multigraphs."""
from aoiroute.aoi.Route import Route
from aoiroute.euler.EdgeSelector import EdgeSelector
from aoiroute.euler.eligible_next import eligible_next
from aoiroute.euler.euler_error import NotEulerianError
from aoiroute.euler.TraversalState import Candidate, TraversalState
from aoiroute.graph.Edge import EdgeCopy
from aoiroute.graph.MultiGraph import MultiGraph
from aoiroute.graph.structure import is_eulerian


def check_eulerian(mg: MultiGraph, start: int) -> None:
    """
    Raises:
        NotEulerianError:
            Multigraph is not connected, has odd degrees or start is not its
            node.
    """
    if start < 0 or start >= mg.node_count:
        raise NotEulerianError(f"start node {start} is out of the graph")
    if not is_eulerian(mg):
        raise NotEulerianError(
            f"multigraph is not Eulerian, odd nodes: {mg.odd_nodes()}"
        )


def fleury(mg: MultiGraph, start: int, sel: EdgeSelector) -> Route:
    """Builds Eulerian cycle choosing every step by sel among eligible
    copies.

    Raises:
        NotEulerianError:
            Multigraph has no Eulerian cycle from start.
    """
    check_eulerian(mg, start)

    state: TraversalState = TraversalState(mg, start)
    while not state.is_complete:
        candidates: list[Candidate] = eligible_next(state, state.current)
        chosen: Candidate = sel.select(state, candidates)
        if chosen not in candidates:
            raise ValueError(
                f"selector {sel} returned not eligible copy {chosen}"
            )
        state.traverse(chosen)
    return state.route()


def hierholzer(mg: MultiGraph, start: int) -> Route:
    """Builds Eulerian cycle by splicing closed subtours.

    Smallest neighbor and copy ids are taken first, so the output is
    deterministic.

    Raises:
        NotEulerianError:
            Multigraph has no Eulerian cycle from start.
    """
    check_eulerian(mg, start)

    unused: list[list[EdgeCopy]] = [
        sorted(
            mg.incident_copies(v),
            key=lambda c: (c.edge.other(v), c.copy_id),
            reverse=True
        )
        for v in range(mg.node_count)
    ]
    used: set[int] = set()
    stack: list[int] = [start]
    circuit: list[int] = []

    while stack:
        v: int = stack[-1]
        while unused[v] and unused[v][-1].copy_id in used:
            unused[v].pop()
        if unused[v]:
            edge_copy: EdgeCopy = unused[v].pop()
            used.add(edge_copy.copy_id)
            stack.append(edge_copy.edge.other(v))
        else:
            circuit.append(stack.pop())

    circuit.reverse()
    return Route(nodes=tuple(circuit))
