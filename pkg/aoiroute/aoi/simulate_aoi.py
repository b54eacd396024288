import math

import numpy as np

from aoiroute import validation
from aoiroute.aoi.aoi_error import StepTooCoarseError
from aoiroute.aoi.Route import Route
from aoiroute.aoi.walk import Step, walk_steps
from aoiroute.graph.Graph import Graph
from aoiroute.log.Log import Log


def simulate_aoi(
    g: Graph,
    r: Route,
    dx: float,
    dt: float,
    warmup_periods: int = 2,
    measure_periods: int = 4
) -> float:
    """Estimates time-average AoI by a discretized simulation.

    Every edge is split into cells of width close to dx, each represented by
    its midpoint. The walker moves at unit speed; time advances in steps of
    about dt (the period is split into a whole number of steps). On every
    step all ages grow by the step, then points passed during the step are
    reset to zero and the width-weighted age sum is recorded. Ages start at
    zero, warmup periods are discarded and the recorded sums are averaged
    over the measured periods.

    Any closed walk is accepted. Edges the walk never passes keep aging.

    Args:
        g:
            Graph to patrol.
        r:
            Closed walk on g.
        dx:
            Point spacing.
        dt:
            Time step, at most a quarter of the shortest edge.
        warmup_periods (optional):
            Discarded periods, at least 2.
        measure_periods (optional):
            Averaged periods, at least 1.

    Returns:
        Estimated average AoI.

    Raises:
        ValidationError:
            Resolution or period counts are out of range.
        StepTooCoarseError:
            dt exceeds a quarter of the shortest edge length.
        NotClosedWalkError, NotAWalkError:
            Route is not a closed walk on g.
    """
    validation.validate_finite(dx, "dx", is_positive=True)
    validation.validate_finite(dt, "dt", is_positive=True)
    validation.validate(warmup_periods, int)
    validation.validate(measure_periods, int)
    if warmup_periods < 2 or measure_periods < 1:
        raise validation.ValidationError(
            f"warmup_periods={warmup_periods} should be at least 2 and"
            f" measure_periods={measure_periods} at least 1"
        )

    steps: list[Step] = walk_steps(g, r)
    min_length: float = min(e.length for e in g.edges)
    if dt > min_length / 4:
        raise StepTooCoarseError(
            f"dt={dt} exceeds quarter of the shortest edge {min_length}"
        )

    period: float = math.fsum(step.edge.length for step in steps)

    # Cells of each edge occupy range first..first+count of global points
    first_point: dict[int, int] = {}
    midpoints: dict[int, np.ndarray] = {}
    widths_parts: list[np.ndarray] = []
    point_total: int = 0
    for e in g.edges:
        count: int = max(1, round(e.length / dx))
        width: float = e.length / count
        first_point[e.id] = point_total
        midpoints[e.id] = (np.arange(count) + 0.5) * width
        widths_parts.append(np.full(count, width))
        point_total += count
    widths: np.ndarray = np.concatenate(widths_parts)
    total_width: float = float(widths.sum())

    pass_times_parts: list[np.ndarray] = []
    pass_points_parts: list[np.ndarray] = []
    start: float = 0.0
    for edge, is_forward in steps:
        along: np.ndarray = midpoints[edge.id]
        if not is_forward:
            along = edge.length - along
        pass_times_parts.append(start + along)
        pass_points_parts.append(
            first_point[edge.id] + np.arange(len(along))
        )
        start += edge.length
    period_times: np.ndarray = np.concatenate(pass_times_parts)
    period_points: np.ndarray = np.concatenate(pass_points_parts)

    period_count: int = warmup_periods + measure_periods
    times: np.ndarray = (
        period_times[None, :]
        + period * np.arange(period_count)[:, None]
    ).ravel()
    points: np.ndarray = np.tile(period_points, period_count)

    steps_per_period: int = max(1, math.ceil(period / dt - 1e-9))
    step: float = period / steps_per_period
    step_total: int = steps_per_period * period_count

    # Step index at which each pass resets its point
    reset_steps: np.ndarray = np.minimum(
        np.ceil(times / step - 1e-9).astype(np.int64), step_total
    )
    order: np.ndarray = np.lexsort((reset_steps, points))
    sorted_points: np.ndarray = points[order]
    sorted_resets: np.ndarray = reset_steps[order]

    previous_resets: np.ndarray = np.zeros_like(sorted_resets)
    is_same_point: np.ndarray = sorted_points[1:] == sorted_points[:-1]
    previous_resets[1:][is_same_point] = sorted_resets[:-1][is_same_point]

    # Width-weighted age sum at step j is total_width*j*step minus the
    # width-weighted sum of last reset times up to j
    reset_increments: np.ndarray = (
        (sorted_resets - previous_resets) * step * widths[sorted_points]
    )
    last_reset_sums: np.ndarray = np.cumsum(np.bincount(
        sorted_resets, weights=reset_increments, minlength=step_total + 1
    ))

    measured: np.ndarray = np.arange(
        warmup_periods * steps_per_period + 1, step_total + 1
    )
    age_sums: np.ndarray = (
        total_width * measured * step - last_reset_sums[measured]
    )
    result: float = float(age_sums.mean())

    Log.bind(points=point_total, steps=step_total).debug(
        f"simulated route {r.format()}: {result}"
    )
    return result
