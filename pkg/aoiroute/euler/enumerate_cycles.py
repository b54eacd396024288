from aoiroute import validation
from aoiroute.aoi.Route import Route
from aoiroute.euler.cycle import check_eulerian
from aoiroute.graph.Edge import EdgeCopy
from aoiroute.graph.MultiGraph import MultiGraph
from aoiroute.model.Model import Model


class CycleEnumeration(Model):
    """Eulerian cycles found from a fixed start node.

    Attributes:
        routes:
            Found cycles as node sequences, in discovery order.
        copy_sequences:
            Traversed copy ids of every found cycle.
        is_cap_exceeded:
            Whether more cycles exist than the cap allowed to collect.
    """
    routes: list[Route]
    copy_sequences: list[tuple[int, ...]]
    is_cap_exceeded: bool

    @property
    def count(self) -> int:
        return len(self.routes)

    @property
    def distinct_node_sequence_count(self) -> int:
        return len({r.nodes for r in self.routes})


def enumerate_eulerian_cycles(
    mg: MultiGraph,
    start: int,
    cap: int,
    *,
    is_copy_distinct: bool = True
) -> CycleEnumeration:
    """Lists Eulerian cycles starting and ending at start by exhaustive
    backtracking.

    Reflections count as distinct cycles. Intended for small multigraphs
    (about 14 copies).

    Args:
        mg:
            Eulerian multigraph.
        start:
            Start node.
        cap:
            Maximum number of cycles to collect.
        is_copy_distinct (optional):
            Whether cycles differing only in the order of parallel copies
            are distinct. Defaults to True.

    Raises:
        NotEulerianError:
            Multigraph has no Eulerian cycle from start.
    """
    validation.validate(cap, int)
    if cap < 1:
        raise validation.ValidationError(f"cap={cap} should be positive")
    check_eulerian(mg, start)

    incident: list[list[EdgeCopy]] = [
        sorted(mg.incident_copies(v), key=lambda c: c.copy_id)
        for v in range(mg.node_count)
    ]
    total: int = mg.copy_count
    used: set[int] = set()
    nodes: list[int] = [start]
    copy_sequence: list[int] = []
    routes: list[Route] = []
    copy_sequences: list[tuple[int, ...]] = []
    is_cap_exceeded: bool = False

    def walk(v: int) -> None:
        nonlocal is_cap_exceeded
        if is_cap_exceeded:
            return
        if len(copy_sequence) == total:
            if len(routes) >= cap:
                is_cap_exceeded = True
                return
            routes.append(Route(nodes=tuple(nodes)))
            copy_sequences.append(tuple(copy_sequence))
            return

        tried_edges: set[int] = set()
        for edge_copy in incident[v]:
            if edge_copy.copy_id in used:
                continue
            if not is_copy_distinct:
                if edge_copy.edge.id in tried_edges:
                    continue
                tried_edges.add(edge_copy.edge.id)

            u: int = edge_copy.edge.other(v)
            used.add(edge_copy.copy_id)
            copy_sequence.append(edge_copy.copy_id)
            nodes.append(u)
            walk(u)
            nodes.pop()
            copy_sequence.pop()
            used.discard(edge_copy.copy_id)

    walk(start)

    return CycleEnumeration(
        routes=routes,
        copy_sequences=copy_sequences,
        is_cap_exceeded=is_cap_exceeded
    )
