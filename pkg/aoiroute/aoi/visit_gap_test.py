import math

import numpy as np

from aoiroute import validation
from aoiroute.aoi.aoi_error import NegativeGapError
from aoiroute.aoi.visit_gap import (
    edge_aoi_single_visit,
    edge_aoi_two_visits,
    visit_gap_opposite,
    visit_gap_same,
)


def test_zero_gap():
    assert math.isclose(visit_gap_same(1.0, 0.0), 0.5)
    assert math.isclose(visit_gap_opposite(1.0, 0.0), 2 / 3)


def test_gap_values():
    assert math.isclose(visit_gap_same(2.0, 4.0), 36.0)
    assert math.isclose(visit_gap_opposite(1.0, 4.0), 38 / 3)


def test_negative_gap():
    validation.expect(visit_gap_same, NegativeGapError, 1.0, -0.5)
    validation.expect(visit_gap_opposite, NegativeGapError, 1.0, -0.5)


def test_non_positive_length():
    validation.expect(
        visit_gap_same, validation.ValidationError, 0.0, 1.0
    )


def test_two_visits():
    # Back and forth over a unit edge, period 2
    assert math.isclose(
        edge_aoi_two_visits(1.0, 0.0, 0.0, is_same_direction=False), 4 / 3
    )
    assert math.isclose(
        edge_aoi_two_visits(1.0, 3.0, 7.0, is_same_direction=True), 40.0
    )


def test_single_visit():
    assert math.isclose(edge_aoi_single_visit(1.0, 4.0), 8.0)
    assert math.isclose(edge_aoi_single_visit(2.0, 12.0), 144.0)
    validation.expect(edge_aoi_single_visit, NegativeGapError, 2.0, 1.0)


def test_even_spacing_is_best():
    length: float = 1.0
    period: float = 10.0
    slack: float = period - 2 * length
    offsets: np.ndarray = np.linspace(0, slack / 2, 9)

    values: list[float] = [
        edge_aoi_two_visits(
            length,
            slack / 2 + offset,
            slack / 2 - offset,
            is_same_direction=True
        )
        for offset in offsets
    ]

    assert math.isclose(values[0], 0.25 * length * period ** 2)
    assert all(a < b for a, b in zip(values, values[1:]))
