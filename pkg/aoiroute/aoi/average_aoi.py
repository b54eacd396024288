import math

from aoiroute.aoi.AoiReport import AoiReport, EdgeAoi
from aoiroute.aoi.Route import Route
from aoiroute.aoi.VisitSchedule import Direction, Visit, VisitSchedule
from aoiroute.aoi.visit_gap import visit_gap_opposite, visit_gap_same
from aoiroute.aoi.walk import (
    Classification,
    Step,
    classify_route,
    edge_set_length,
    walk_steps,
)
from aoiroute.graph.Graph import Graph


def average_aoi(g: Graph, r: Route) -> AoiReport:
    """Computes exact time-average AoI of periodic route r.

    The route steps are doubled. For every step of the second copy the
    doubled sequence is scanned backward, summing lengths of other edges into
    gap t, until the previous visit of the same edge is met. The visit then
    accumulates visit_gap_same or visit_gap_opposite depending on whether
    both visits share the direction. Once-traversed edges meet themselves a
    period earlier, so their gap is l(R) - l(e).

    Raises:
        NotClosedWalkError, NotAWalkError, NotInF1Error:
            Route is not an F1 route on g.
    """
    classification: Classification = classify_route(g, r)
    steps: list[Step] = walk_steps(g, r)
    step_count: int = len(steps)
    doubled: list[Step] = steps + steps

    accumulated: dict[int, list[float]] = {e.id: [] for e in g.edges}
    for i in range(step_count, 2 * step_count):
        edge, is_forward = doubled[i]
        gap_parts: list[float] = []
        j: int = i - 1
        while doubled[j].edge.id != edge.id:
            gap_parts.append(doubled[j].edge.length)
            j -= 1
        t: float = math.fsum(gap_parts)

        if doubled[j].is_forward == is_forward:
            accumulated[edge.id].append(visit_gap_same(edge.length, t))
        else:
            accumulated[edge.id].append(visit_gap_opposite(edge.length, t))

    per_edge: list[EdgeAoi] = [
        EdgeAoi(
            edge_id=e.id,
            u=e.u,
            v=e.v,
            accumulated=math.fsum(accumulated[e.id])
        )
        for e in g.edges
    ]
    length: float = math.fsum(step.edge.length for step in steps)

    return AoiReport(
        average_aoi=math.fsum(x.accumulated for x in per_edge) / length,
        route_length=length,
        e1_length=edge_set_length(g, classification.once),
        e2_length=edge_set_length(g, classification.twice),
        per_edge=per_edge
    )


def visit_schedule(g: Graph, r: Route) -> VisitSchedule:
    """Lists visits of each edge within one period.

    Raises:
        NotClosedWalkError, NotAWalkError:
            Route is not a closed walk on g.
    """
    visits: dict[int, list[Visit]] = {e.id: [] for e in g.edges}
    start: float = 0.0
    for edge, is_forward in walk_steps(g, r):
        visits[edge.id].append(Visit(
            start=start,
            direction=Direction.FORWARD if is_forward else Direction.BACKWARD
        ))
        start += edge.length
    return VisitSchedule(visits=visits, period=start)
