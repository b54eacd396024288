"""Main testing suite.
"""
import os

from pytest import fixture

from aoiroute.boot.boot_test import (
    set_dev_mode,
    set_prod_mode,
    set_std_app_rc_path,
    set_test_mode,
    std_app_rc_path,
    std_boot,
)
from aoiroute.corpus.corpus_test import (
    std_even_spacing,
    std_k4_hub,
    std_single_edge,
    std_tight_split,
    std_triangle,
    std_wheel,
)
from aoiroute.graph.graph_test import (
    std_doubled_path,
    std_path,
    std_square_with_diagonal,
)
from aoiroute.worker.Worker import Worker

ENV_KEYS: list[str] = [
    "AoiRoute_Mode",
    "AoiRoute_RootDir",
    "AoiRoute_AppRCPath"
]


@fixture(autouse=True)
def run_around_tests():
    yield

    __discardWorkers()
    for key in ENV_KEYS:
        os.environ[key] = ""


def __discardWorkers(W: type[Worker] = Worker):
    for NestedW in W.__subclasses__():
        __discardWorkers(NestedW)
    W.discard(should_validate=False)
