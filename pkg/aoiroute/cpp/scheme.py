"""Approximation schemes: Eulerian cycles of augmented multigraphs."""
from aoiroute.aoi.Route import Route
from aoiroute.cpp.augment import AugmentKind, augment
from aoiroute.euler.cycle import fleury, hierholzer
from aoiroute.euler.EdgeSelector import EdgeSelector
from aoiroute.graph.Graph import Graph
from aoiroute.graph.MultiGraph import MultiGraph


def scheme_route(
    g: Graph,
    kind: AugmentKind,
    sel: EdgeSelector | None = None,
    *,
    start: int = 0
) -> Route:
    mg: MultiGraph = augment(g, kind)
    if sel is None:
        return hierholzer(mg, start)
    return fleury(mg, start, sel)


def dup_scheme(
    g: Graph,
    sel: EdgeSelector | None = None,
    *,
    start: int = 0
) -> Route:
    """Eulerian cycle of the fully doubled graph. Every edge is traversed
    twice.

    Args:
        g:
            Connected graph.
        sel (optional):
            Selector for a Fleury walk. Defaults to deterministic Hierholzer
            construction.
        start (optional):
            Start node. Defaults to 0.
    """
    return scheme_route(g, AugmentKind.DUP, sel, start=start)


def cpp_scheme(
    g: Graph,
    sel: EdgeSelector | None = None,
    *,
    start: int = 0
) -> Route:
    """Eulerian cycle of the CPP-augmented graph, a shortest route
    traversing every edge.
    """
    return scheme_route(g, AugmentKind.CPP, sel, start=start)
