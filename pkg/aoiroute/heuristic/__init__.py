"""Potential-based edge selection for Fleury walks."""
from aoiroute.aoi.Route import Route
from aoiroute.cpp.augment import AugmentKind, augment, check_connected
from aoiroute.cpp.ShortestPathTable import ShortestPathTable, apsp
from aoiroute.euler.cycle import fleury
from aoiroute.graph.Graph import Graph
from aoiroute.graph.MultiGraph import MultiGraph
from aoiroute.heuristic.HeuristicConfig import HeuristicConfig
from aoiroute.heuristic.potential import potential
from aoiroute.heuristic.PotentialSelector import PotentialSelector
from aoiroute.log.Log import Log


def heuristic_route(
    g: Graph,
    base: AugmentKind = AugmentKind.CPP,
    v0: int = 0,
    *,
    config: HeuristicConfig | None = None
) -> Route:
    """Builds a route by a Fleury walk over the augmented graph, choosing
    every next copy by the highest potential.

    Args:
        g:
            Connected graph.
        base (optional):
            Augmentation to walk on: full duplication or CPP. Defaults to
            CPP.
        v0 (optional):
            Start node. Defaults to 0.
        config (optional):
            Heuristic settings. Defaults to the loaded HeuristicConfig.

    Returns:
        Closed route, deterministic for given inputs.

    Raises:
        DisconnectedGraphError:
            Graph is not connected.
    """
    if config is None:
        config = HeuristicConfig.load()

    check_connected(g)
    table: ShortestPathTable = apsp(g)
    mg: MultiGraph = augment(g, base, table=table)
    route: Route = fleury(
        mg, v0, PotentialSelector(table, config.epsilon)
    )
    Log.debug(
        f"heuristic route over {base.value} multigraph with"
        f" {mg.copy_count} copies built"
    )
    return route


__all__ = [
    "HeuristicConfig",
    "PotentialSelector",
    "heuristic_route",
    "potential",
]
