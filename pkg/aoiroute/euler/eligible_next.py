from collections import deque

from aoiroute.euler.euler_error import StrandedError
from aoiroute.euler.TraversalState import Candidate, TraversalState
from aoiroute.graph.Edge import EdgeCopy


def eligible_next(state: TraversalState, v: int) -> list[Candidate]:
    """Lists untraversed copies (v, u) whose removal keeps every other
    untraversed copy reachable from u.

    If no copy passes the check, all incident untraversed copies are
    returned, so the walk takes the bridge last.

    Raises:
        StrandedError:
            Node v has no untraversed copies while some copies remain.
    """
    neighbors: dict[int, list[EdgeCopy]] = state.untraversed_neighbors(v)
    if not neighbors:
        if state.remaining:
            raise StrandedError(
                f"node {v} has no untraversed edges, {state.remaining}"
                " copies remain"
            )
        return []

    # Parallel copies of one pair are interchangeable for reachability
    is_keeping_by_neighbor: dict[int, bool] = {
        u: keeps_reachable(state, v, u) for u in neighbors
    }
    incident: list[Candidate] = state.untraversed_incident(v)
    eligible: list[Candidate] = [
        c for c in incident if is_keeping_by_neighbor[c.neighbor]
    ]
    return eligible if eligible else incident


def keeps_reachable(state: TraversalState, v: int, u: int) -> bool:
    """Checks that after removing one copy of (v, u) every node still having
    untraversed copies can be reached from u over untraversed copies.
    """
    def count_between(a: int, b: int) -> int:
        count: int = len(state.untraversed_neighbors(a).get(b, []))
        if (a == v and b == u) or (a == u and b == v):
            count -= 1
        return count

    visited: set[int] = {u}
    queue: deque[int] = deque([u])
    while queue:
        a: int = queue.popleft()
        for b in state.untraversed_neighbors(a):
            if b not in visited and count_between(a, b) > 0:
                visited.add(b)
                queue.append(b)

    for a in range(state.multigraph.node_count):
        if a in visited:
            continue
        if any(
            count_between(a, b) > 0 for b in state.untraversed_neighbors(a)
        ):
            return False
    return True
