"""Random graph generation."""
from enum import Enum

import networkx as nx
import numpy as np

from aoiroute import validation
from aoiroute.graph.build_graph import EdgeSpec, build_graph
from aoiroute.graph.GenerationConfig import GenerationConfig
from aoiroute.graph.Graph import Graph
from aoiroute.graph.graph_error import GenerationBudgetExceededError
from aoiroute.graph.structure import is_connected, is_eulerian
from aoiroute.log.Log import Log
from aoiroute.rnd import make_rng

NX_SEED_BOUND: int = 2 ** 32


class ErRequirement(Enum):
    CONNECTED = "connected"
    NON_EULERIAN = "non_eulerian"


DEFAULT_REQUIREMENTS: frozenset[ErRequirement] = frozenset(
    {ErRequirement.CONNECTED, ErRequirement.NON_EULERIAN}
)


def draw_lengths(
    rng: np.random.Generator,
    size: int,
    length_low: float,
    length_high: float
) -> np.ndarray:
    """Draws uniform lengths from (length_low, length_high).

    Exact length_low draws are redrawn, so zero lengths never appear for the
    default (0, 10) range.
    """
    lengths: np.ndarray = rng.uniform(length_low, length_high, size)
    rejected: np.ndarray = lengths <= length_low
    while rejected.any():
        lengths[rejected] = rng.uniform(
            length_low, length_high, int(rejected.sum())
        )
        rejected = lengths <= length_low
    return lengths


def generate_er(
    n: int,
    p: float,
    length_low: float,
    length_high: float,
    seed: int,
    *,
    require: frozenset[ErRequirement] = DEFAULT_REQUIREMENTS,
    config: GenerationConfig | None = None
) -> Graph:
    """Draws Erdos-Renyi G(n, p) graphs with uniform lengths until all
    requirements hold.

    Args:
        n:
            Number of nodes, at least 3.
        p:
            Edge probability in (0, 1).
        length_low:
            Exclusive lower length bound, non-negative.
        length_high:
            Exclusive upper length bound, greater than length_low.
        seed:
            64-bit seed. Same seed and parameters give the same graph.
        require (optional):
            Predicates the graph should satisfy. Defaults to connected and
            non-Eulerian.
        config (optional):
            Generation settings. Defaults to loaded GenerationConfig.

    Returns:
        First drawn graph satisfying the requirements.

    Raises:
        ValidationError:
            Parameters are out of their ranges.
        GenerationBudgetExceededError:
            No graph satisfied the requirements within max_attempts draws.
    """
    validation.validate(n, int)
    if n < 3:
        raise validation.ValidationError(f"n={n} should be at least 3")
    validation.validate_finite(p, "p")
    if not 0 < p < 1:
        raise validation.ValidationError(f"p={p} should be in (0, 1)")
    validation.validate_finite(length_low, "length_low", is_non_negative=True)
    validation.validate_finite(length_high, "length_high")
    if length_low >= length_high:
        raise validation.ValidationError(
            f"length_low={length_low} should be less than"
            f" length_high={length_high}"
        )
    validation.validate_each(require, ErRequirement)
    if config is None:
        config = GenerationConfig.load()

    rng: np.random.Generator = make_rng(seed)
    log = Log.bind(n=n, p=p, seed=seed)

    for attempt in range(config.max_attempts):
        nx_graph: nx.Graph = nx.gnp_random_graph(
            n, p, seed=int(rng.integers(NX_SEED_BOUND))
        )
        pairs: list[tuple[int, int]] = sorted(
            (min(u, v), max(u, v)) for u, v in nx_graph.edges()
        )
        lengths: np.ndarray = draw_lengths(
            rng, len(pairs), length_low, length_high
        )

        if not pairs:
            continue
        g: Graph = build_graph(
            n,
            [(u, v, float(length)) for (u, v), length in zip(pairs, lengths)]
        )
        if (
            ErRequirement.CONNECTED in require
            and not is_connected(g)
        ):
            continue
        if (
            ErRequirement.NON_EULERIAN in require
            and is_eulerian(g)
        ):
            continue

        log.debug(f"accepted graph on attempt {attempt + 1}")
        return g

    raise GenerationBudgetExceededError(
        f"no graph for n={n}, p={p} satisfied"
        f" {sorted(r.value for r in require)}"
        f" within {config.max_attempts} attempts"
    )


def generate_eulerian(
    n: int,
    seed: int,
    *,
    length_low: float = 0.0,
    length_high: float = 10.0,
    extra_triangles: int = 2
) -> Graph:
    """Draws a connected graph with all degrees even.

    The graph is a random Hamiltonian cycle plus up to extra_triangles
    triangles whose edges are all new, so every degree stays even.
    """
    validation.validate(n, int)
    if n < 3:
        raise validation.ValidationError(f"n={n} should be at least 3")
    rng: np.random.Generator = make_rng(seed)

    order: list[int] = [int(v) for v in rng.permutation(n)]
    pairs: set[tuple[int, int]] = set()
    for i in range(n):
        a, b = order[i], order[(i + 1) % n]
        pairs.add((min(a, b), max(a, b)))

    added: int = 0
    for _ in range(50 * (extra_triangles + 1)):
        if added >= extra_triangles:
            break
        a, b, c = (int(v) for v in rng.choice(n, 3, replace=False))
        triangle: list[tuple[int, int]] = [
            (min(a, b), max(a, b)),
            (min(b, c), max(b, c)),
            (min(a, c), max(a, c))
        ]
        if any(pair in pairs for pair in triangle):
            continue
        pairs.update(triangle)
        added += 1

    sorted_pairs: list[tuple[int, int]] = sorted(pairs)
    lengths: np.ndarray = draw_lengths(
        rng, len(sorted_pairs), length_low, length_high
    )
    edge_list: list[EdgeSpec] = [
        (u, v, float(length)) for (u, v), length in zip(sorted_pairs, lengths)
    ]
    return build_graph(n, edge_list)
