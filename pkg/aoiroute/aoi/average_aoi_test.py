import math

from aoiroute import validation
from aoiroute.aoi.AoiReport import AoiReport
from aoiroute.aoi.aoi_error import (
    NotAWalkError,
    NotClosedWalkError,
    NotInF1Error,
)
from aoiroute.aoi.average_aoi import average_aoi, visit_schedule
from aoiroute.aoi.Route import Route
from aoiroute.aoi.VisitSchedule import Direction, Visit, VisitSchedule
from aoiroute.aoi.walk import classify_route, route_length
from aoiroute.corpus.CorpusInstance import CorpusInstance
from aoiroute.corpus.instances import single_edge
from aoiroute.graph.Graph import Graph


def test_single_edge(std_single_edge: CorpusInstance):
    report: AoiReport = average_aoi(
        std_single_edge.graph, std_single_edge.routes["R"]
    )

    assert math.isclose(report.average_aoi, 2 / 3)
    assert report.route_length == 2.0
    assert report.e1_length == 0.0
    assert report.e2_length == 1.0


def test_single_edge_scaled():
    instance: CorpusInstance = single_edge(3.0)

    assert math.isclose(
        average_aoi(instance.graph, instance.routes["R"]).average_aoi, 6.0
    )


def test_eulerian_cycle_reaches_global_bound(std_triangle: CorpusInstance):
    assert math.isclose(
        average_aoi(std_triangle.graph, std_triangle.routes["R"]).average_aoi,
        4.5
    )


def test_tight_split(std_tight_split: CorpusInstance):
    report: AoiReport = average_aoi(
        std_tight_split.graph, std_tight_split.routes["R"]
    )

    assert math.isclose(report.average_aoi, 13.5)
    assert report.e1_length == 4.0
    assert report.e2_length == 1.0


def test_path_back_and_forth(std_path: Graph):
    report: AoiReport = average_aoi(std_path, Route.of(0, 1, 2, 1, 0))

    assert math.isclose(report.average_aoi, 8 / 3)
    assert math.isclose(report.per_edge_accumulated[0], 16 / 3)
    assert math.isclose(report.per_edge_accumulated[1], 16 / 3)
    assert math.isclose(
        math.fsum(report.per_edge_accumulated.values()),
        report.average_aoi * report.route_length
    )


def test_start_node_does_not_matter(std_path: Graph):
    assert math.isclose(
        average_aoi(std_path, Route.of(1, 2, 1, 0, 1)).average_aoi, 8 / 3
    )


def test_not_closed(std_path: Graph):
    validation.expect(
        average_aoi, NotClosedWalkError, std_path, Route.of(0, 1, 2)
    )


def test_not_a_walk(std_path: Graph):
    validation.expect(
        average_aoi, NotAWalkError, std_path, Route.of(0, 2, 0)
    )
    validation.expect(
        average_aoi, NotAWalkError, std_path, Route.of(0, 5, 0)
    )


def test_edge_missed(std_path: Graph):
    validation.expect(
        average_aoi, NotInF1Error, std_path, Route.of(0, 1, 0)
    )


def test_edge_thrice(std_single_edge: CorpusInstance):
    validation.expect(
        classify_route,
        NotInF1Error,
        std_single_edge.graph,
        Route.of(0, 1, 0, 1, 0)
    )
    validation.expect(
        classify_route,
        NotClosedWalkError,
        std_single_edge.graph,
        Route.of(0, 1, 0, 1)
    )
    validation.expect(
        average_aoi,
        NotInF1Error,
        std_single_edge.graph,
        Route.of(0, 1, 0, 1, 0, 1, 0)
    )


def test_classify(std_tight_split: CorpusInstance):
    classification = classify_route(
        std_tight_split.graph, std_tight_split.routes["R"]
    )

    assert classification.twice == frozenset({1})
    assert classification.once == frozenset({0, 2, 3, 4})
    assert route_length(
        std_tight_split.graph, std_tight_split.routes["R"]
    ) == 6.0


def test_visit_schedule(std_path: Graph):
    schedule: VisitSchedule = visit_schedule(std_path, Route.of(0, 1, 2, 1, 0))

    assert schedule.period == 4.0
    assert schedule.visits[0] == [
        Visit(start=0.0, direction=Direction.FORWARD),
        Visit(start=3.0, direction=Direction.BACKWARD)
    ]
    assert schedule.visit_count(1) == 2
