from aoiroute import validation
from aoiroute.graph.Edge import Edge
from aoiroute.graph.Graph import Graph

EdgeSpec = tuple[int, int, float]


def build_graph(node_count: int, edge_list: list[EdgeSpec]) -> Graph:
    """Builds graph assigning edge ids in input order.

    Args:
        node_count:
            Number of nodes, ids are 0..node_count-1.
        edge_list:
            List of (u, v, length) triples. The (u, v) order becomes the
            canonical orientation of the edge.

    Raises:
        ValidationError:
            Arguments have wrong types.
        DuplicateEdgeError, SelfLoopError, NonPositiveLengthError,
        NodeOutOfRangeError:
            Graph invariants are broken.
    """
    validation.validate(node_count, int)
    validation.validate_each(edge_list, [tuple, list])

    edges: list[Edge] = []
    for i, spec in enumerate(edge_list):
        validation.validate_length(spec, 3)
        u, v, length = spec
        validation.validate(u, int)
        validation.validate(v, int)
        validation.validate(length, [int, float])
        edges.append(Edge(id=i, u=u, v=v, length=float(length)))

    return Graph(node_count=node_count, edges=edges)
