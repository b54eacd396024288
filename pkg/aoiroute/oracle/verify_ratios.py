from aoiroute.aoi.AoiReport import AoiReport
from aoiroute.aoi.average_aoi import average_aoi
from aoiroute.aoi.bounds import (
    cpp_ratio_bound,
    dup_ratio_bound,
    lower_bound_global,
)
from aoiroute.error.MalfunctionError import MalfunctionError
from aoiroute.graph.Graph import Graph
from aoiroute.oracle.OptimalRoute import OptimalRoute
from aoiroute.oracle.optimal import optimal_f1, scheme_routes
from aoiroute.oracle.OracleConfig import OracleConfig
from aoiroute.oracle.RatioReport import RatioReport

RATIO_TOLERANCE: float = 1e-9


def verify_ratios(
    g: Graph,
    *,
    config: OracleConfig | None = None
) -> RatioReport:
    """Compares scheme routes with the exhaustive optimum and the global
    lower bound.

    Raises:
        MalfunctionError:
            Some ratio exceeds 2, or its proven refined bound.
        BudgetExceededError:
            Oracle search is too large.
    """
    optimal: OptimalRoute = optimal_f1(g, config=config)
    lower_bound: float = lower_bound_global(g)

    reports: dict[str, AoiReport] = {
        name: average_aoi(g, route)
        for name, route in scheme_routes(g).items()
    }
    aoi: dict[str, float] = {
        name: report.average_aoi for name, report in reports.items()
    }
    ratio_to_optimal: dict[str, float] = {
        name: value / optimal.aoi for name, value in aoi.items()
    }
    ratio_to_lower_bound: dict[str, float] = {
        name: value / lower_bound for name, value in aoi.items()
    }

    optimal_report: AoiReport = average_aoi(g, optimal.route)
    dup_bound: float = dup_ratio_bound(
        g.total_length, optimal_report.e1_length
    )
    cpp_bound: float = cpp_ratio_bound(
        g.total_length,
        reports["cpp"].e1_length,
        optimal_report.e1_length
    )

    for ratios in (ratio_to_optimal, ratio_to_lower_bound):
        for name, ratio in ratios.items():
            if ratio > 2 + RATIO_TOLERANCE:
                raise MalfunctionError(
                    f"{name} route has ratio {ratio} above 2 on {g}"
                )
    if ratio_to_optimal["dup"] > dup_bound + RATIO_TOLERANCE:
        raise MalfunctionError(
            f"dup ratio {ratio_to_optimal['dup']} exceeds its bound"
            f" {dup_bound}"
        )
    if ratio_to_optimal["cpp"] > cpp_bound + RATIO_TOLERANCE:
        raise MalfunctionError(
            f"cpp ratio {ratio_to_optimal['cpp']} exceeds its bound"
            f" {cpp_bound}"
        )

    return RatioReport(
        optimal=optimal,
        lower_bound=lower_bound,
        aoi=aoi,
        ratio_to_optimal=ratio_to_optimal,
        ratio_to_lower_bound=ratio_to_lower_bound,
        dup_ratio_bound=dup_bound,
        cpp_ratio_bound=cpp_bound
    )

