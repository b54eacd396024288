"""Experiment harness over random graphs."""
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
from aoiroute.bench.run_experiment import (
    iterate_experiment,
    plan_route,
    run_experiment,
    run_sweep,
)
from aoiroute.bench.summarize import summarize

__all__ = [
    "CSV_HEADER",
    "Algorithm",
    "AlgorithmSummary",
    "ExperimentConfig",
    "ResultRow",
    "iterate_experiment",
    "load_rows",
    "plan_route",
    "read_rows",
    "run_experiment",
    "run_sweep",
    "save_rows",
    "summarize",
    "write_rows",
]
