from aoiroute import validation
from aoiroute.aoi.walk import classify_route
from aoiroute.euler.enumerate_cycles import (
    CycleEnumeration,
    enumerate_eulerian_cycles,
)
from aoiroute.graph.build_graph import build_graph
from aoiroute.graph.Graph import Graph
from aoiroute.graph.MultiGraph import MultiGraph
from aoiroute.oracle.enumerate_f1 import count_bound


def doubled(g: Graph) -> MultiGraph:
    return MultiGraph.from_duplicated(g, {e.id for e in g.edges})


def test_doubled_single_edge():
    g: Graph = build_graph(2, [(0, 1, 1.0)])
    enumeration: CycleEnumeration = enumerate_eulerian_cycles(
        doubled(g), 0, 100
    )

    assert enumeration.count == 2
    assert enumeration.distinct_node_sequence_count == 1
    assert enumeration.count >= count_bound(g)
    assert not enumeration.is_cap_exceeded


def test_doubled_path(std_path: Graph):
    enumeration: CycleEnumeration = enumerate_eulerian_cycles(
        doubled(std_path), 0, 100
    )

    assert enumeration.count == 4
    assert enumeration.count >= count_bound(std_path)
    assert enumeration.distinct_node_sequence_count == 1


def test_doubled_triangle(std_triangle):
    g: Graph = std_triangle.graph
    enumeration: CycleEnumeration = enumerate_eulerian_cycles(
        doubled(g), 0, 10 ** 5
    )

    assert count_bound(g) == 16
    assert enumeration.count >= 16
    for route in enumeration.routes:
        assert classify_route(g, route).twice == frozenset({0, 1, 2})


def test_parallel_copies_indistinct(std_triangle):
    copy_distinct: CycleEnumeration = enumerate_eulerian_cycles(
        doubled(std_triangle.graph), 0, 10 ** 5
    )
    indistinct: CycleEnumeration = enumerate_eulerian_cycles(
        doubled(std_triangle.graph), 0, 10 ** 5, is_copy_distinct=False
    )

    assert indistinct.count == copy_distinct.distinct_node_sequence_count
    assert copy_distinct.count == 8 * indistinct.count


def test_cap_exceeded(std_triangle):
    enumeration: CycleEnumeration = enumerate_eulerian_cycles(
        doubled(std_triangle.graph), 0, 3
    )

    assert enumeration.count == 3
    assert enumeration.is_cap_exceeded


def test_wrong_cap(std_doubled_path: MultiGraph):
    validation.expect(
        enumerate_eulerian_cycles,
        validation.ValidationError,
        std_doubled_path,
        0,
        0
    )


def test_doubled_graphs_up_to_three_edges():
    graphs: list[Graph] = [
        build_graph(2, [(0, 1, 1.0)]),
        build_graph(3, [(0, 1, 1.0), (1, 2, 1.0)]),
        build_graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]),
        build_graph(4, [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)]),
        build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])
    ]

    for g in graphs:
        for start in range(g.node_count):
            enumeration: CycleEnumeration = enumerate_eulerian_cycles(
                doubled(g), start, 10 ** 5
            )

            assert not enumeration.is_cap_exceeded
            assert enumeration.count >= count_bound(g), (g, start)
