"""Command line interface.

Subcommands:
    eval    evaluate a given route on a graph
    plan    build a route by one of the schemes and evaluate it
    bench   run random graph experiments and write CSV rows
    oracle  find the optimal route of a small graph and compare the schemes

Graph arguments accept a JSON file path or "corpus:<name>".
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable

from aoiroute.aoi.average_aoi import average_aoi
from aoiroute.aoi.bounds import bounds
from aoiroute.aoi.Route import Route
from aoiroute.aoi.simulate_aoi import simulate_aoi
from aoiroute.aoi.SimulationConfig import SimulationConfig
from aoiroute.bench.Algorithm import Algorithm
from aoiroute.bench.ExperimentConfig import ExperimentConfig
from aoiroute.bench.result_csv import save_rows, write_rows
from aoiroute.bench.run_experiment import plan_route, run_sweep
from aoiroute.bench.summarize import summarize
from aoiroute.boot.Boot import Boot
from aoiroute.corpus.instances import find_instance
from aoiroute.cpp.augment import AugmentKind
from aoiroute.cpp.scheme import scheme_route
from aoiroute.error.Error import Error
from aoiroute.graph.Graph import Graph
from aoiroute.graph.graph_file import read_graph
from aoiroute.log.Log import Log
from aoiroute.model.Model import Model
from aoiroute.oracle.OracleConfig import OracleConfig
from aoiroute.oracle.verify_ratios import verify_ratios
from aoiroute.validation import ModelValidationError, ValidationError

CORPUS_PREFIX: str = "corpus:"
VALIDATION_EXIT_CODE: int = 2

# Schemes of the plan subcommand without a selector
DETERMINISTIC_SCHEMES: dict[str, AugmentKind] = {
    "dup": AugmentKind.DUP,
    "cpp": AugmentKind.CPP
}


def load_graph_source(source: str) -> Graph:
    """Loads graph from a JSON file or a corpus instance.

    Raises:
        UnknownInstanceError:
            No corpus instance with such name.
        GraphFileError:
            File is missing or malformed.
    """
    if source.startswith(CORPUS_PREFIX):
        return find_instance(source[len(CORPUS_PREFIX):]).graph
    return read_graph(Path(source))


def run_eval(args: argparse.Namespace) -> dict[str, Any]:
    g: Graph = load_graph_source(args.graph)
    route: Route = Route.parse(args.route)
    output: dict[str, Any] = {"report": as_json(average_aoi(g, route))}

    if args.simulate:
        config: SimulationConfig = SimulationConfig.load(
            extra=given_options(args, {"dx": "dx", "dt": "dt"})
        )
        output["simulated_aoi"] = simulate_aoi(
            g,
            route,
            config.dx,
            config.dt,
            config.warmup_periods,
            config.measure_periods
        )
    return output


def run_plan(args: argparse.Namespace) -> dict[str, Any]:
    g: Graph = load_graph_source(args.graph)

    route: Route
    if args.scheme in DETERMINISTIC_SCHEMES:
        route = scheme_route(
            g, DETERMINISTIC_SCHEMES[args.scheme], start=args.start
        )
    else:
        route = plan_route(
            g, Algorithm(args.scheme), seed=args.seed, start=args.start
        )

    return {
        "route": route.format(),
        "report": as_json(average_aoi(g, route)),
        "bounds": as_json(bounds(g, route))
    }


def run_bench(args: argparse.Namespace) -> dict[str, Any] | None:
    options: dict[str, Any] = given_options(args, {
        "graphs": "graph_count",
        "seed": "seed",
        "trials": "random_trials_per_graph",
        "length_low": "length_low",
        "length_high": "length_high"
    })
    if args.algs is not None:
        try:
            options["algorithms"] = [
                Algorithm(name.strip()) for name in args.algs.split(",")
            ]
        except ValueError as err:
            raise ValidationError(
                f"unknown algorithm in {args.algs!r}, expected names from"
                f" {[a.value for a in Algorithm]}"
            ) from err
    config: ExperimentConfig = ExperimentConfig.load(extra={
        **options, "n": args.n[0], "p": args.p[0]
    })

    rows = run_sweep(config, args.n, args.p)
    if args.out is None:
        write_rows(rows, sys.stdout)
        return None

    save_rows(rows, Path(args.out))
    Log.info(f"{len(rows)} rows written to {args.out}")
    return {"summary": [as_json(s) for s in summarize(rows)]}


def run_oracle(args: argparse.Namespace) -> dict[str, Any]:
    g: Graph = load_graph_source(args.graph)
    config: OracleConfig = OracleConfig.load(
        extra=given_options(args, {"cap": "max_states"})
    )
    return as_json(verify_ratios(g, config=config))


def given_options(
    args: argparse.Namespace,
    names: dict[str, str]
) -> dict[str, Any]:
    """Maps given command line options to config field names, skipping
    options left unset.
    """
    return {
        field: getattr(args, option)
        for option, field in names.items()
        if getattr(args, option) is not None
    }


def as_json(model: Model) -> dict[str, Any]:
    return json.loads(model.json())


def make_parser() -> argparse.ArgumentParser:
    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        prog="aoiroute",
        description="Age of Information of periodic patrol routes"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    eval_parser = subparsers.add_parser("eval", help="evaluate a route")
    eval_parser.add_argument("--graph", required=True)
    eval_parser.add_argument("--route", required=True)
    eval_parser.add_argument("--simulate", action="store_true")
    eval_parser.add_argument("--dx", type=float)
    eval_parser.add_argument("--dt", type=float)
    eval_parser.set_defaults(handler=run_eval)

    plan_parser = subparsers.add_parser("plan", help="build a route")
    plan_parser.add_argument("--graph", required=True)
    plan_parser.add_argument(
        "--scheme",
        required=True,
        choices=[*DETERMINISTIC_SCHEMES, *(a.value for a in Algorithm)]
    )
    plan_parser.add_argument("--seed", type=int, default=0)
    plan_parser.add_argument("--start", type=int, default=0)
    plan_parser.set_defaults(handler=run_plan)

    bench_parser = subparsers.add_parser(
        "bench", help="run random graph experiments"
    )
    bench_parser.add_argument("--n", type=int, nargs="+", required=True)
    bench_parser.add_argument("--p", type=float, nargs="+", required=True)
    bench_parser.add_argument("--graphs", type=int)
    bench_parser.add_argument("--seed", type=int)
    bench_parser.add_argument("--algs")
    bench_parser.add_argument("--trials", type=int)
    bench_parser.add_argument("--length-low", type=float)
    bench_parser.add_argument("--length-high", type=float)
    bench_parser.add_argument("--out")
    bench_parser.set_defaults(handler=run_bench)

    oracle_parser = subparsers.add_parser(
        "oracle", help="exhaustive optimum of a small graph"
    )
    oracle_parser.add_argument("--graph", required=True)
    oracle_parser.add_argument("--cap", type=int)
    oracle_parser.set_defaults(handler=run_oracle)

    return parser


@Log.catch(reraise=True)
def main(argv: list[str] | None = None) -> int:
    """Runs the command line interface.

    Returns:
        Process exit code: 0 on success, Error.exit_code on package errors,
        2 on invalid config values.
    """
    args: argparse.Namespace = make_parser().parse_args(argv)
    handler: Callable[[argparse.Namespace], dict[str, Any] | None] = \
        args.handler

    try:
        Boot()
        output: dict[str, Any] | None = handler(args)
    except Error as err:
        Log.bind(command=args.command).error(err.message)
        print(json.dumps({"error": err.dict()}), file=sys.stderr)
        return err.exit_code
    except ModelValidationError as err:
        Log.bind(command=args.command).error(str(err))
        print(
            json.dumps({"error": {
                "type": "ValidationError",
                "message": str(err),
                "exit_code": VALIDATION_EXIT_CODE
            }}),
            file=sys.stderr
        )
        return VALIDATION_EXIT_CODE

    if output is not None:
        print(json.dumps(output, indent=2))
    return 0
