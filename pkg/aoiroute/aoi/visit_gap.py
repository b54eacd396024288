"""Closed-form accumulated AoI of edge visits.

The accumulated AoI of an edge over a time span is the integral over time of
the integral of point ages along the edge. A visit preceded by an idle gap t
(route length walked since the previous visit of the edge finished)
accumulates a cubic polynomial in (t, l_e).
"""
from aoiroute import validation
from aoiroute.aoi.aoi_error import NegativeGapError


def visit_gap_same(l_e: float, t: float) -> float:
    """Accumulated AoI of a visit made in the same direction as the
    previous one, after idle gap t: ½t²l + tl² + ½l³.

    Raises:
        NegativeGapError:
            Gap is negative.
    """
    __check(l_e, t)
    return 0.5 * t * t * l_e + t * l_e * l_e + 0.5 * l_e ** 3


def visit_gap_opposite(l_e: float, t: float) -> float:
    """Accumulated AoI of a visit made opposite to the previous one, after
    idle gap t: ½t²l + tl² + ⅔l³.

    Raises:
        NegativeGapError:
            Gap is negative.
    """
    __check(l_e, t)
    return 0.5 * t * t * l_e + t * l_e * l_e + 2.0 / 3.0 * l_e ** 3


def edge_aoi_two_visits(
    l_e: float,
    d1: float,
    d2: float,
    *,
    is_same_direction: bool
) -> float:
    """Accumulated AoI over one period of an edge visited twice with idle
    gaps d1 and d2 between the visits.
    """
    if is_same_direction:
        return visit_gap_same(l_e, d1) + visit_gap_same(l_e, d2)
    return visit_gap_opposite(l_e, d1) + visit_gap_opposite(l_e, d2)


def edge_aoi_single_visit(l_e: float, l_r: float) -> float:
    """Accumulated AoI over one period of an edge visited once per period of
    length l_r: ½·l_r²·l_e.
    """
    validation.validate_finite(l_e, "l_e", is_positive=True)
    validation.validate_finite(l_r, "l_r", is_positive=True)
    if l_r < l_e:
        raise NegativeGapError(
            f"period {l_r} is shorter than the edge length {l_e}"
        )
    return visit_gap_same(l_e, l_r - l_e)


def __check(l_e: float, t: float) -> None:
    validation.validate_finite(l_e, "l_e", is_positive=True)
    validation.validate_finite(t, "t")
    if t < 0:
        raise NegativeGapError(f"gap {t} should be non-negative")
