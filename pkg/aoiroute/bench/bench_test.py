import io
import math
from pathlib import Path

import numpy as np

from aoiroute import validation
from aoiroute.aoi.average_aoi import average_aoi
from aoiroute.aoi.bounds import bounds
from aoiroute.aoi.BoundsReport import BoundsReport
from aoiroute.aoi.Route import Route
from aoiroute.aoi.walk import classify_route
from aoiroute.bench.Algorithm import Algorithm
from aoiroute.bench.AlgorithmSummary import AlgorithmSummary
from aoiroute.bench.ExperimentConfig import ExperimentConfig
from aoiroute.bench.result_csv import (
    load_rows,
    read_rows,
    save_rows,
    write_rows,
)
from aoiroute.bench.ResultRow import CSV_HEADER, ResultRow
from aoiroute.bench.run_experiment import plan_route, run_experiment, run_sweep
from aoiroute.bench.summarize import summarize
from aoiroute.corpus.CorpusInstance import CorpusInstance
from aoiroute.cpp.augment import AugmentKind, cpp_augment
from aoiroute.graph.generate import generate_er
from aoiroute.graph.Graph import Graph
from aoiroute.validation import ModelValidationError

TOLERANCE: float = 1e-9


def make_row(algorithm: str, ratio: float, graph_id: int = 0) -> ResultRow:
    return ResultRow(
        graph_id=graph_id,
        n=4,
        p=0.5,
        seed=1,
        edge_count=5,
        total_length=10.0,
        lower_bound=50.0,
        algorithm=algorithm,
        aoi=50.0 * ratio,
        ratio=ratio,
        route_length=12.0,
        elapsed_ms=0.5
    )


def without_elapsed(rows: list[ResultRow]) -> list[dict]:
    return [row.dict(exclude={"elapsed_ms"}) for row in rows]


def mean_ratios(rows: list[ResultRow]) -> dict[str, float]:
    return {s.algorithm: s.mean for s in summarize(rows)}


def test_csv_header():
    assert CSV_HEADER == [
        "graph_id",
        "n",
        "p",
        "seed",
        "edge_count",
        "total_length",
        "lower_bound",
        "algorithm",
        "aoi",
        "ratio",
        "route_length",
        "elapsed_ms"
    ]


def test_csv_read_write():
    rows: list[ResultRow] = [
        make_row("heu_cpp", 1.1), make_row("rand_cpp", 1 / 3)
    ]
    out: io.StringIO = io.StringIO()

    assert write_rows(rows, out) == 2
    assert out.getvalue().splitlines()[0] == ",".join(CSV_HEADER)
    assert read_rows(io.StringIO(out.getvalue())) == rows


def test_csv_wrong_header():
    validation.expect(read_rows, ValueError, io.StringIO("a,b\n1,2\n"))


def test_save_load_rows(tmp_path: Path):
    p: Path = Path(tmp_path, "rows.csv")
    rows: list[ResultRow] = [
        make_row("rand_dup", 1.5, graph_id=i) for i in range(3)
    ]

    assert save_rows(rows, p) == 3
    assert load_rows(p) == rows


def test_summarize_single():
    summary: AlgorithmSummary = summarize([make_row("heu_cpp", 1.25)])[0]

    assert summary.count == 1
    assert summary.mean == summary.median == summary.p95 == 1.25


def test_summarize_two():
    summaries: list[AlgorithmSummary] = summarize([
        make_row("heu_cpp", 1.2),
        make_row("rand_cpp", 1.9),
        make_row("heu_cpp", 1.4)
    ])

    assert [s.algorithm for s in summaries] == ["heu_cpp", "rand_cpp"]
    assert math.isclose(summaries[0].mean, 1.3)
    assert math.isclose(summaries[0].median, 1.3)
    assert math.isclose(summaries[0].p95, 1.39)


def test_summarize_empty():
    validation.expect(summarize, validation.ValidationError, [])


def test_plan_route(std_tight_split: CorpusInstance):
    g: Graph = std_tight_split.graph
    for algorithm in Algorithm:
        route: Route = plan_route(g, algorithm, seed=3)
        twice: frozenset[int] = classify_route(g, route).twice

        assert route == plan_route(g, algorithm, seed=3)
        if algorithm.augment_kind is AugmentKind.CPP:
            assert twice == cpp_augment(g).duplicated
        else:
            assert twice == frozenset(range(g.edge_count))


def test_experiment_deterministic():
    cfg: ExperimentConfig = ExperimentConfig(
        n=8, p=0.3, graph_count=5, seed=11
    )
    first: list[ResultRow] = run_experiment(cfg)

    assert without_elapsed(first) == without_elapsed(run_experiment(cfg))
    assert len(first) == 5 * len(Algorithm)
    assert [row.algorithm for row in first[:4]] == [a.value for a in Algorithm]
    assert all(1 - 1e-9 <= row.ratio <= 2 + 1e-9 for row in first)
    assert all(
        math.isclose(row.ratio, row.aoi / row.lower_bound) for row in first
    )


def test_experiment_seed_matters():
    first: list[ResultRow] = run_experiment(
        ExperimentConfig(n=8, p=0.3, graph_count=2, seed=1)
    )
    second: list[ResultRow] = run_experiment(
        ExperimentConfig(n=8, p=0.3, graph_count=2, seed=2)
    )

    assert without_elapsed(first) != without_elapsed(second)


def test_experiment_random_trials():
    rows: list[ResultRow] = run_experiment(ExperimentConfig(
        n=6,
        p=0.4,
        graph_count=2,
        algorithms=[Algorithm.RAND_CPP, Algorithm.HEU_CPP],
        random_trials_per_graph=3
    ))

    assert [row.algorithm for row in rows[:4]] == [
        "rand_cpp", "rand_cpp", "rand_cpp", "heu_cpp"
    ]
    assert len(rows) == 8


def test_sweep_order():
    rows: list[ResultRow] = run_sweep(
        ExperimentConfig(graph_count=1, algorithms=[Algorithm.HEU_CPP]),
        [6, 7],
        [0.4, 0.5]
    )

    assert [(row.n, row.p) for row in rows] == [
        (6, 0.4), (6, 0.5), (7, 0.4), (7, 0.5)
    ]


def test_summary_matches_recomputation(tmp_path: Path):
    p: Path = Path(tmp_path, "rows.csv")
    save_rows(
        run_experiment(ExperimentConfig(n=8, p=0.3, graph_count=10)), p
    )
    rows: list[ResultRow] = load_rows(p)

    for summary in summarize(rows):
        ratios: list[float] = [
            row.ratio for row in rows if row.algorithm == summary.algorithm
        ]
        assert summary.count == 10
        assert math.isclose(summary.mean, sum(ratios) / len(ratios))
        assert math.isclose(summary.median, float(np.median(ratios)))


def test_heuristic_beats_random_on_average():
    for n, p in ((10, 0.2), (15, 0.4)):
        means: dict[str, float] = mean_ratios(run_experiment(
            ExperimentConfig(n=n, p=p, graph_count=200, seed=0)
        ))

        assert means["heu_cpp"] <= means["rand_cpp"], (n, p)
        assert means["heu_dup"] <= means["rand_dup"], (n, p)
        assert means["rand_cpp"] <= means["rand_dup"], (n, p)


def test_cpp_gain_grows_with_size():
    gaps: list[float] = []
    for n in (10, 15, 20):
        means: dict[str, float] = mean_ratios(run_experiment(
            ExperimentConfig(
                n=n,
                p=0.2,
                graph_count=200,
                seed=0,
                algorithms=[Algorithm.RAND_DUP, Algorithm.RAND_CPP]
            )
        ))
        gaps.append(means["rand_dup"] - means["rand_cpp"])

    assert gaps[0] < gaps[1] < gaps[2], gaps


def test_bound_sandwich_for_every_planner():
    cells: list[tuple[int, float]] = [
        (n, p) for n in (8, 10, 12) for p in (0.2, 0.4)
    ]
    for seed in range(500):
        n, p = cells[seed % len(cells)]
        g: Graph = generate_er(n, p, 0.0, 10.0, seed)
        for algorithm in Algorithm:
            route: Route = plan_route(g, algorithm, seed=seed)
            report: BoundsReport = bounds(g, route)
            aoi: float = average_aoi(g, route).average_aoi

            assert report.global_lower <= report.f1_lower * (1 + TOLERANCE)
            assert report.f1_lower <= aoi * (1 + TOLERANCE)
            assert aoi <= report.f1_upper * (1 + TOLERANCE)
            assert aoi / report.global_lower <= 2 + TOLERANCE, (
                seed, algorithm
            )


def test_config_from_app_rc(std_boot):
    assert ExperimentConfig.load().graph_count == 3
    assert ExperimentConfig.load(extra={"graph_count": 7}).graph_count == 7


def test_config_wrong_values():
    for kwargs in (
        {"n": 2},
        {"p": 1.0},
        {"graph_count": 0},
        {"seed": -1},
        {"algorithms": []},
        {"algorithms": [Algorithm.HEU_CPP, Algorithm.HEU_CPP]},
        {"length_low": 5.0, "length_high": 5.0}
    ):
        validation.expect(ExperimentConfig, ModelValidationError, **kwargs)
