import math

from aoiroute import validation
from aoiroute.aoi.aoi_error import NotAWalkError, StepTooCoarseError
from aoiroute.aoi.average_aoi import average_aoi
from aoiroute.aoi.Route import Route
from aoiroute.aoi.simulate_aoi import simulate_aoi
from aoiroute.corpus.CorpusInstance import CorpusInstance
from aoiroute.corpus.instances import CORPUS, find_instance
from aoiroute.graph.build_graph import build_graph
from aoiroute.graph.Graph import Graph


def test_corpus_within_one_percent():
    for name in CORPUS:
        instance: CorpusInstance = find_instance(name)
        for label, route in instance.routes.items():
            exact: float = average_aoi(instance.graph, route).average_aoi
            simulated: float = simulate_aoi(
                instance.graph, route, 1e-3, 1e-3
            )

            assert abs(simulated - exact) <= 0.01 * exact, f"{name} {label}"


def test_corpus_error_shrinks_with_resolution():
    for name in CORPUS:
        instance: CorpusInstance = find_instance(name)
        for label, route in instance.routes.items():
            exact: float = average_aoi(instance.graph, route).average_aoi
            coarse: float = abs(
                simulate_aoi(instance.graph, route, 1e-3, 1e-3) - exact
            )
            fine: float = abs(
                simulate_aoi(instance.graph, route, 5e-4, 5e-4) - exact
            )

            assert fine < coarse, f"{name} {label}: {fine} >= {coarse}"


def test_path_route(std_path: Graph):
    simulated: float = simulate_aoi(
        std_path, Route.of(0, 1, 2, 1, 0), 0.005, 0.005
    )

    assert math.isclose(simulated, 8 / 3, rel_tol=0.01)


def test_unvisited_edges_keep_aging(std_path: Graph):
    # Closed walk missing edge (1, 2) is still simulated
    simulated: float = simulate_aoi(std_path, Route.of(0, 1, 0), 0.1, 0.1)

    assert simulated > average_aoi(
        std_path, Route.of(0, 1, 2, 1, 0)
    ).average_aoi


def test_step_too_coarse(std_path: Graph):
    validation.expect(
        simulate_aoi,
        StepTooCoarseError,
        std_path,
        Route.of(0, 1, 2, 1, 0),
        0.1,
        0.5
    )


def test_wrong_periods(std_path: Graph):
    validation.expect(
        simulate_aoi,
        validation.ValidationError,
        std_path,
        Route.of(0, 1, 2, 1, 0),
        0.1,
        0.1,
        warmup_periods=1
    )


def test_graph_without_edges():
    validation.expect(
        simulate_aoi,
        NotAWalkError,
        build_graph(2, []),
        Route.of(0, 1, 0),
        0.1,
        0.1
    )
