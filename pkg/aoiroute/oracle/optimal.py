"""Exhaustive search for the least-AoI route traversing every edge once or
twice.

The search covers Eulerian cycles of every duplication multigraph, so its
optimum is complete under the assumption that the optimal route of this
family is such a cycle.
"""
import math

from aoiroute.aoi.average_aoi import average_aoi
from aoiroute.aoi.bounds import lower_bound_f1
from aoiroute.aoi.Route import Route
from aoiroute.aoi.walk import classify_route
from aoiroute.cpp.augment import AugmentKind
from aoiroute.cpp.scheme import cpp_scheme, dup_scheme
from aoiroute.error.MalfunctionError import MalfunctionError
from aoiroute.euler.cycle import check_eulerian
from aoiroute.graph.Graph import Graph
from aoiroute.graph.MultiGraph import MultiGraph
from aoiroute.heuristic import heuristic_route
from aoiroute.log.Log import Log
from aoiroute.oracle.CycleSearch import IMPROVEMENT_TOLERANCE, CycleSearch
from aoiroute.oracle.enumerate_f1 import enumerate_f1_multigraphs
from aoiroute.oracle.OptimalRoute import OptimalRoute
from aoiroute.oracle.oracle_error import BudgetExceededError
from aoiroute.oracle.OracleConfig import OracleConfig


def scheme_routes(g: Graph) -> dict[str, Route]:
    """Routes of the four deterministic schemes, all starting at node 0."""
    return {
        "dup": dup_scheme(g),
        "cpp": cpp_scheme(g),
        "heu_dup": heuristic_route(g, AugmentKind.DUP),
        "heu_cpp": heuristic_route(g, AugmentKind.CPP)
    }


def optimal_f1(
    g: Graph,
    *,
    config: OracleConfig | None = None
) -> OptimalRoute:
    """Finds the least-AoI route among routes traversing every edge once or
    twice.

    The best scheme route seeds the incumbent. Multigraphs are searched in
    ascending order of their split lower bound, and the search stops at the
    first one whose bound cannot beat the incumbent.

    Raises:
        DisconnectedGraphError:
            Graph is not connected.
        BudgetExceededError:
            Too many edges, or more than OracleConfig.max_states states.
    """
    if config is None:
        config = OracleConfig.load()
    multigraphs: list[MultiGraph] = enumerate_f1_multigraphs(g, config=config)

    best_route: Route | None = None
    best_aoi: float = math.inf
    for route in scheme_routes(g).values():
        aoi: float = average_aoi(g, route).average_aoi
        if aoi < best_aoi:
            best_route, best_aoi = route, aoi
    if best_route is None:
        raise MalfunctionError(f"no scheme route evaluated for {g}")

    def split_bound(mg: MultiGraph) -> float:
        twice: float = math.fsum(
            g.edges[i].length for i in mg.duplicated
        )
        return lower_bound_f1(max(0.0, g.total_length - twice), twice)

    state_count: int = 0
    searched_count: int = 0
    try:
        for mg in sorted(multigraphs, key=split_bound):
            if split_bound(mg) >= best_aoi * (1 - IMPROVEMENT_TOLERANCE):
                break
            search: CycleSearch = CycleSearch(
                mg,
                best_aoi=best_aoi,
                max_states=config.max_states - state_count
            )
            try:
                search.run()
            finally:
                state_count += search.state_count
            searched_count += 1
            if search.best_nodes is not None:
                best_route = Route(nodes=search.best_nodes)
                best_aoi = search.best_aoi
    except BudgetExceededError as err:
        Log.bind(edge_count=g.edge_count).warning(
            f"oracle search aborted after {state_count} states"
        )
        raise BudgetExceededError(
            f"oracle search exceeded {config.max_states} states"
        ) from err

    Log.debug(
        f"oracle searched {searched_count} of {len(multigraphs)}"
        f" multigraphs in {state_count} states"
    )
    return OptimalRoute(
        route=best_route,
        aoi=average_aoi(g, best_route).average_aoi,
        duplicated=classify_route(g, best_route).twice,
        state_count=state_count
    )


def optimal_cycle(
    mg: MultiGraph,
    *,
    config: OracleConfig | None = None
) -> OptimalRoute:
    """Finds the least-AoI Eulerian cycle of the given multigraph, e.g. the
    best route built on a CPP augmentation.

    Raises:
        NotEulerianError:
            Multigraph has no Eulerian cycle.
        BudgetExceededError:
            More than OracleConfig.max_states states.
    """
    if config is None:
        config = OracleConfig.load()
    check_eulerian(mg, 0)

    search: CycleSearch = CycleSearch(
        mg, best_aoi=math.inf, max_states=config.max_states
    )
    search.run()
    if search.best_nodes is None:
        raise MalfunctionError(f"no Eulerian cycle found in {mg}")

    route: Route = Route(nodes=search.best_nodes)
    return OptimalRoute(
        route=route,
        aoi=average_aoi(mg.base, route).average_aoi,
        duplicated=mg.duplicated,
        state_count=search.state_count
    )
