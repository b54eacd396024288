"""Lower and upper bounds of the time-average AoI.

All bounds are homogeneous of degree two in lengths (per-edge ones of degree
three), so they scale together with average_aoi.
"""
from aoiroute import validation
from aoiroute.aoi.BoundsReport import BoundsReport
from aoiroute.aoi.Route import Route
from aoiroute.aoi.walk import Classification, classify_route, edge_set_length
from aoiroute.graph.Graph import Graph


def lower_bound_global(g: Graph) -> float:
    """½·l(E)², valid for every periodic route of a connected graph and
    reached by Eulerian cycles.
    """
    return 0.5 * g.total_length ** 2


def lower_bound_f1(l_e1: float, l_e2: float) -> float:
    """Lower bound for routes traversing edges of total length l_e1 once and
    of total length l_e2 twice: ½l1² + 5/4·l1·l2 + ½l2².
    """
    __check_split(l_e1, l_e2)
    return 0.5 * l_e1 ** 2 + 1.25 * l_e1 * l_e2 + 0.5 * l_e2 ** 2


def upper_bound_f1(l_e1: float, l_e2: float) -> float:
    """Upper bound for the same split: ½l1² + 3/2·l1·l2 + l2²."""
    __check_split(l_e1, l_e2)
    return 0.5 * l_e1 ** 2 + 1.5 * l_e1 * l_e2 + l_e2 ** 2


def per_edge_lower(l_e: float, l_r: float) -> float:
    """Least accumulated AoI of an edge visited twice per period l_r,
    reached with evenly spaced visits: ¼·l_e·l_r².
    """
    __check_twice_visited(l_e, l_r)
    return 0.25 * l_e * l_r ** 2


def per_edge_upper(l_e: float, l_r: float) -> float:
    """Largest accumulated AoI of an edge visited twice per period l_r:
    4/3·l_e³ - l_r·l_e² + ½·l_e·l_r².
    """
    __check_twice_visited(l_e, l_r)
    return 4.0 / 3.0 * l_e ** 3 - l_r * l_e ** 2 + 0.5 * l_e * l_r ** 2


def bounds(g: Graph, r: Route) -> BoundsReport:
    """Evaluates the global bound and the F1 bounds at the route's split.

    Raises:
        NotClosedWalkError, NotAWalkError, NotInF1Error:
            Route is not an F1 route on g.
    """
    classification: Classification = classify_route(g, r)
    l_e1: float = edge_set_length(g, classification.once)
    l_e2: float = edge_set_length(g, classification.twice)
    return BoundsReport(
        global_lower=lower_bound_global(g),
        f1_lower=lower_bound_f1(l_e1, l_e2),
        f1_upper=upper_bound_f1(l_e1, l_e2)
    )


def dup_ratio_bound(l_e: float, l_e1_opt: float) -> float:
    """Bound of AoI(duplicated scheme) / AoI(F1 optimum), where l_e1_opt is
    the length traversed once by the F1 optimum. Never exceeds 2.
    """
    return l_e ** 2 / __f1_optimum_floor(l_e, l_e1_opt)


def cpp_ratio_bound(
    l_e: float,
    l_e1: float,
    l_e1_opt: float | None = None
) -> float:
    """Bound of AoI(CPP scheme) / AoI(F1 optimum) for a CPP route traversing
    length l_e1 once. Without l_e1_opt the bound is taken against the global
    lower bound ½·l(E)². Never exceeds 2.
    """
    __check_split(l_e1, l_e - l_e1)
    numerator: float = l_e ** 2 - 0.5 * l_e * l_e1
    if l_e1_opt is None:
        return numerator / (0.5 * l_e ** 2)
    return numerator / __f1_optimum_floor(l_e, l_e1_opt)


def __f1_optimum_floor(l_e: float, l_e1_opt: float) -> float:
    validation.validate_finite(l_e, "l_e", is_positive=True)
    __check_split(l_e1_opt, l_e - l_e1_opt)
    return 0.5 * l_e ** 2 + 0.25 * l_e1_opt * (l_e - l_e1_opt)


def __check_split(l_e1: float, l_e2: float) -> None:
    # Tiny negative values come from subtracting float sums
    validation.validate_finite(l_e1, "l_e1")
    validation.validate_finite(l_e2, "l_e2")
    if l_e1 < -1e-9 or l_e2 < -1e-9:
        raise validation.ValidationError(
            f"lengths l_e1={l_e1}, l_e2={l_e2} should be non-negative"
        )


def __check_twice_visited(l_e: float, l_r: float) -> None:
    validation.validate_finite(l_e, "l_e", is_positive=True)
    validation.validate_finite(l_r, "l_r", is_positive=True)
    if 2 * l_e > l_r * (1 + 1e-12):
        raise validation.ValidationError(
            f"edge of length {l_e} cannot be visited twice within period"
            f" {l_r}"
        )
