import itertools
import math

import networkx as nx

from aoiroute import validation
from aoiroute.aoi.average_aoi import average_aoi
from aoiroute.aoi.bounds import lower_bound_global
from aoiroute.corpus.CorpusInstance import CorpusInstance
from aoiroute.cpp.augment import cpp_augment, duplicate_all
from aoiroute.euler.enumerate_cycles import (
    CycleEnumeration,
    enumerate_eulerian_cycles,
)
from aoiroute.graph.build_graph import build_graph
from aoiroute.graph.generate import generate_er
from aoiroute.graph.Graph import Graph
from aoiroute.graph.MultiGraph import MultiGraph
from aoiroute.graph.structure import is_connected, is_eulerian
from aoiroute.oracle.enumerate_f1 import count_bound, enumerate_f1_multigraphs
from aoiroute.oracle.optimal import optimal_cycle, optimal_f1
from aoiroute.oracle.OptimalRoute import OptimalRoute
from aoiroute.oracle.oracle_error import BudgetExceededError
from aoiroute.oracle.OracleConfig import OracleConfig
from aoiroute.oracle.RatioReport import RatioReport
from aoiroute.oracle.verify_ratios import verify_ratios

TOLERANCE: float = 1e-9


def small_connected_graphs(max_nodes: int, max_edges: int) -> list[Graph]:
    """Non-isomorphic connected non-Eulerian graphs with unit lengths."""
    found: list[nx.Graph] = []
    graphs: list[Graph] = []
    for n in range(2, max_nodes + 1):
        pairs: list[tuple[int, int]] = list(
            itertools.combinations(range(n), 2)
        )
        for m in range(n - 1, min(max_edges, len(pairs)) + 1):
            for chosen in itertools.combinations(pairs, m):
                g: Graph = build_graph(n, [(u, v, 1.0) for u, v in chosen])
                if not is_connected(g) or is_eulerian(g):
                    continue
                nxg: nx.Graph = g.to_networkx()
                if any(nx.is_isomorphic(nxg, other) for other in found):
                    continue
                found.append(nxg)
                graphs.append(g)
    return graphs


def test_enumerate_single_edge(std_single_edge: CorpusInstance):
    multigraphs: list[MultiGraph] = enumerate_f1_multigraphs(
        std_single_edge.graph
    )

    assert [mg.duplicated for mg in multigraphs] == [frozenset({0})]


def test_enumerate_triangle(std_triangle: CorpusInstance):
    multigraphs: list[MultiGraph] = enumerate_f1_multigraphs(
        std_triangle.graph
    )

    assert [mg.duplicated for mg in multigraphs] == [
        frozenset(), frozenset({0, 1, 2})
    ]


def test_enumerate_all_eulerian(std_k4_hub: CorpusInstance):
    g: Graph = std_k4_hub.graph
    multigraphs: list[MultiGraph] = enumerate_f1_multigraphs(g)

    assert all(is_eulerian(mg) for mg in multigraphs)
    assert len({mg.duplicated for mg in multigraphs}) == len(multigraphs)
    assert cpp_augment(g).duplicated in {mg.duplicated for mg in multigraphs}
    assert duplicate_all(g).duplicated in {
        mg.duplicated for mg in multigraphs
    }
    # Cycle space of a connected graph has 2^(m - n + 1) elements
    assert len(multigraphs) == 2 ** (g.edge_count - g.node_count + 1)


def test_enumerate_edge_cap(std_k4_hub: CorpusInstance):
    validation.expect(
        enumerate_f1_multigraphs,
        BudgetExceededError,
        std_k4_hub.graph,
        config=OracleConfig(max_edges=5)
    )


def test_count_bound(
    std_single_edge: CorpusInstance,
    std_triangle: CorpusInstance,
    std_path: Graph
):
    assert count_bound(std_single_edge.graph) == 2
    assert count_bound(std_path) == 4
    assert count_bound(std_triangle.graph) == 16
    assert count_bound(build_graph(4, [(0, 1, 1.0)])) == 0


def test_optimal_single_edge(std_single_edge: CorpusInstance):
    optimal: OptimalRoute = optimal_f1(std_single_edge.graph)

    assert math.isclose(optimal.aoi, 2 / 3)
    assert optimal.route.format() == "0,1,0"
    assert optimal.duplicated == frozenset({0})


def test_optimal_eulerian(std_triangle: CorpusInstance):
    optimal: OptimalRoute = optimal_f1(std_triangle.graph)

    assert math.isclose(optimal.aoi, 4.5)


def test_optimal_tight_split(std_tight_split: CorpusInstance):
    optimal: OptimalRoute = optimal_f1(std_tight_split.graph)

    assert optimal.aoi <= 13.5 + TOLERANCE
    assert optimal.aoi >= lower_bound_global(std_tight_split.graph)


def test_optimal_even_spacing(std_even_spacing: CorpusInstance):
    g: Graph = std_even_spacing.graph
    optimal: OptimalRoute = optimal_f1(g)

    assert optimal.aoi <= 101 / 3 + TOLERANCE
    assert math.isclose(average_aoi(g, optimal.route).average_aoi, optimal.aoi)
    assert optimal.route.nodes[0] == 0


def test_cpp_cycle_wheel(std_wheel: CorpusInstance):
    g: Graph = std_wheel.graph
    on_cpp: OptimalRoute = optimal_cycle(cpp_augment(g))

    assert on_cpp.duplicated == frozenset(range(5))
    assert on_cpp.aoi <= average_aoi(
        g, std_wheel.routes["R1"]
    ).average_aoi + TOLERANCE
    assert on_cpp.aoi >= lower_bound_global(g)
    # Best route over all duplications beats every cycle of the CPP one
    assert optimal_f1(g).aoi < on_cpp.aoi


def test_optimal_cycle_of_eulerian(std_triangle: CorpusInstance):
    g: Graph = std_triangle.graph
    on_itself: OptimalRoute = optimal_cycle(
        MultiGraph.from_duplicated(g, set())
    )

    assert math.isclose(on_itself.aoi, 4.5)


def test_optimal_cycle_budget(std_k4_hub: CorpusInstance):
    validation.expect(
        optimal_cycle,
        BudgetExceededError,
        cpp_augment(std_k4_hub.graph),
        config=OracleConfig(max_states=1)
    )


def test_optimal_budget_from_config(std_boot, std_tight_split: CorpusInstance):
    assert OracleConfig.load().max_states == 100000
    assert optimal_f1(std_tight_split.graph).state_count <= 100000


def test_verify_triangle(std_triangle: CorpusInstance):
    report: RatioReport = verify_ratios(std_triangle.graph)

    assert math.isclose(report.lower_bound, 4.5)
    assert math.isclose(report.ratio_to_optimal["cpp"], 1.0)
    assert math.isclose(report.ratio_to_optimal["heu_cpp"], 1.0)
    assert report.dup_ratio_bound <= 2.0


def test_verify_corpus(
    std_tight_split: CorpusInstance,
    std_even_spacing: CorpusInstance
):
    for instance in (std_tight_split, std_even_spacing):
        report: RatioReport = verify_ratios(instance.graph)

        assert set(report.aoi) == {"dup", "cpp", "heu_dup", "heu_cpp"}
        assert all(
            1 - TOLERANCE <= ratio <= 2 + TOLERANCE
            for ratio in report.ratio_to_optimal.values()
        )
        assert all(
            1 - TOLERANCE <= ratio <= 2 + TOLERANCE
            for ratio in report.ratio_to_lower_bound.values()
        )


def brute_force_optimum(g: Graph) -> float:
    """Least AoI over every node sequence of every duplication multigraph."""
    best: float = math.inf
    for mg in enumerate_f1_multigraphs(g):
        cycles: CycleEnumeration = enumerate_eulerian_cycles(
            mg, 0, 10 ** 6, is_copy_distinct=False
        )
        assert not cycles.is_cap_exceeded
        for route in cycles.routes:
            best = min(best, average_aoi(g, route).average_aoi)
    return best


def test_verify_small_graphs_exhaustively():
    graphs: list[Graph] = small_connected_graphs(5, 7)

    assert len(graphs) == 21
    for g in graphs:
        report: RatioReport = verify_ratios(g)
        brute_force: float = brute_force_optimum(g)

        assert math.isclose(
            report.optimal.aoi, brute_force, rel_tol=TOLERANCE
        ), g
        assert report.optimal.aoi >= report.lower_bound * (1 - TOLERANCE)
        assert all(
            aoi >= brute_force * (1 - TOLERANCE)
            for aoi in report.aoi.values()
        )
        assert report.ratio_to_optimal["dup"] <= report.dup_ratio_bound \
            + TOLERANCE


def test_verify_random_lengths():
    checked: int = 0
    for seed in range(30):
        g: Graph = generate_er(5, 0.4, 0.0, 10.0, seed)
        if g.edge_count > 6:
            continue
        report: RatioReport = verify_ratios(g)
        assert report.ratio_to_optimal["cpp"] <= report.cpp_ratio_bound \
            + TOLERANCE
        checked += 1

    assert checked > 0
