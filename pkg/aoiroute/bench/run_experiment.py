import time
from typing import Iterator

from aoiroute.aoi.AoiReport import AoiReport
from aoiroute.aoi.average_aoi import average_aoi
from aoiroute.aoi.bounds import lower_bound_global
from aoiroute.aoi.Route import Route
from aoiroute.aoi.walk import classify_route
from aoiroute.bench.Algorithm import Algorithm
from aoiroute.bench.ExperimentConfig import ExperimentConfig
from aoiroute.bench.ResultRow import ResultRow
from aoiroute.cpp.cpp_error import TooManyOddNodesError
from aoiroute.cpp.scheme import scheme_route
from aoiroute.error.MalfunctionError import MalfunctionError
from aoiroute.euler.RandomSelector import RandomSelector
from aoiroute.graph.generate import generate_er
from aoiroute.graph.Graph import Graph
from aoiroute.graph.graph_error import GenerationBudgetExceededError
from aoiroute.heuristic import heuristic_route
from aoiroute.heuristic.HeuristicConfig import HeuristicConfig
from aoiroute.log.Log import Log
from aoiroute.rnd import derive_seed

RATIO_TOLERANCE: float = 1e-9


def plan_route(
    g: Graph,
    algorithm: Algorithm,
    *,
    seed: int = 0,
    start: int = 0,
    heuristic_config: HeuristicConfig | None = None
) -> Route:
    """Builds a route of the given algorithm.

    Args:
        seed (optional):
            Seed of the random selector, ignored by heuristic algorithms.
            Defaults to 0.
    """
    if algorithm.is_random:
        return scheme_route(
            g, algorithm.augment_kind, RandomSelector(seed), start=start
        )
    return heuristic_route(
        g, algorithm.augment_kind, start, config=heuristic_config
    )


def run_experiment(cfg: ExperimentConfig) -> list[ResultRow]:
    """Generates graph_count random graphs and runs every algorithm on them.

    Random algorithms run random_trials_per_graph times, each trial with its
    own seed derived from the master seed, graph id, algorithm position and
    trial number. Graphs that cannot be generated or augmented within the
    budgets are logged and skipped as a whole.

    Returns:
        Rows ordered by graph id, then by the algorithms order, then by
        trial.

    Raises:
        MalfunctionError:
            Some route breaks the proven ratio range [1, 2].
    """
    return list(iterate_experiment(cfg))


def iterate_experiment(cfg: ExperimentConfig) -> Iterator[ResultRow]:
    log = Log.bind(n=cfg.n, p=cfg.p, seed=cfg.seed)
    heuristic_config: HeuristicConfig = HeuristicConfig.load()
    skipped_count: int = 0

    for graph_id in range(cfg.graph_count):
        graph_seed: int = derive_seed(cfg.seed, graph_id)
        try:
            g: Graph = generate_er(
                cfg.n,
                cfg.p,
                cfg.length_low,
                cfg.length_high,
                graph_seed
            )
            rows: list[ResultRow] = __run_graph(
                cfg, graph_id, graph_seed, g, heuristic_config
            )
        except (GenerationBudgetExceededError, TooManyOddNodesError) as err:
            skipped_count += 1
            log.bind(graph_id=graph_id).warning(
                f"graph skipped: {err.message}"
            )
            continue
        yield from rows

        if (graph_id + 1) % 50 == 0:
            log.info(f"{graph_id + 1} of {cfg.graph_count} graphs done")

    log.info(
        f"experiment finished, {cfg.graph_count - skipped_count} graphs"
        f" evaluated, {skipped_count} skipped"
    )


def __run_graph(
    cfg: ExperimentConfig,
    graph_id: int,
    graph_seed: int,
    g: Graph,
    heuristic_config: HeuristicConfig
) -> list[ResultRow]:
    lower_bound: float = lower_bound_global(g)
    rows: list[ResultRow] = []

    for position, algorithm in enumerate(cfg.algorithms):
        trial_count: int = (
            cfg.random_trials_per_graph if algorithm.is_random else 1
        )
        for trial in range(trial_count):
            started: float = time.perf_counter()
            route: Route = plan_route(
                g,
                algorithm,
                seed=derive_seed(cfg.seed, graph_id, position, trial),
                heuristic_config=heuristic_config
            )
            elapsed_ms: float = (time.perf_counter() - started) * 1000

            classify_route(g, route)
            report: AoiReport = average_aoi(g, route)
            ratio: float = report.average_aoi / lower_bound
            if not 1 - RATIO_TOLERANCE <= ratio <= 2 + RATIO_TOLERANCE:
                raise MalfunctionError(
                    f"{algorithm.value} ratio {ratio} on graph {graph_id}"
                    " is out of [1, 2]"
                )

            rows.append(ResultRow(
                graph_id=graph_id,
                n=cfg.n,
                p=cfg.p,
                seed=graph_seed,
                edge_count=g.edge_count,
                total_length=g.total_length,
                lower_bound=lower_bound,
                algorithm=algorithm.value,
                aoi=report.average_aoi,
                ratio=ratio,
                route_length=report.route_length,
                elapsed_ms=elapsed_ms
            ))

    return rows


def run_sweep(
    cfg: ExperimentConfig,
    ns: list[int],
    ps: list[float]
) -> list[ResultRow]:
    """Runs the experiment for every (n, p) pair, n varying slowest."""
    rows: list[ResultRow] = []
    for n in ns:
        for p in ps:
            cell: ExperimentConfig = ExperimentConfig(
                **{**cfg.dict(), "n": n, "p": p}
            )
            rows.extend(run_experiment(cell))
    return rows
