"""Exhaustive ground truth on small graphs."""
from aoiroute.oracle.CycleSearch import CycleSearch
from aoiroute.oracle.enumerate_f1 import count_bound, enumerate_f1_multigraphs
from aoiroute.oracle.optimal import optimal_cycle, optimal_f1, scheme_routes
from aoiroute.oracle.OptimalRoute import OptimalRoute
from aoiroute.oracle.oracle_error import BudgetExceededError
from aoiroute.oracle.OracleConfig import OracleConfig
from aoiroute.oracle.RatioReport import RatioReport
from aoiroute.oracle.verify_ratios import verify_ratios

__all__ = [
    "BudgetExceededError",
    "CycleSearch",
    "OptimalRoute",
    "OracleConfig",
    "RatioReport",
    "count_bound",
    "enumerate_f1_multigraphs",
    "optimal_cycle",
    "optimal_f1",
    "scheme_routes",
    "verify_ratios",
]
