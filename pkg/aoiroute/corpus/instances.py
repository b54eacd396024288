"""Named instances with published routes and values."""
from typing import Callable

from aoiroute.aoi.Route import Route
from aoiroute.corpus.CorpusInstance import CorpusInstance
from aoiroute.corpus.corpus_error import UnknownInstanceError
from aoiroute.graph.build_graph import build_graph
from aoiroute.graph.Graph import Graph

WHEEL_RING_LENGTH: float = 2.01


def single_edge(a: float = 1.0) -> CorpusInstance:
    """One edge of length a patrolled back and forth: ⅔·a²."""
    return CorpusInstance(
        name="single_edge",
        graph=build_graph(2, [(0, 1, a)]),
        routes={"R": Route.of(0, 1, 0)},
        expected_aoi={"R": 2.0 / 3.0 * a * a},
        expected_length={"R": 2 * a}
    )


def triangle() -> CorpusInstance:
    """Unit triangle, Eulerian: its cycle reaches ½·l(E)²."""
    return CorpusInstance(
        name="triangle",
        graph=build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]),
        routes={"R": Route.of(0, 1, 2, 0)},
        expected_aoi={"R": 4.5},
        expected_length={"R": 3.0}
    )


def k4_hub() -> CorpusInstance:
    """Two CPP routes of equal length 12 and different AoI."""
    return CorpusInstance(
        name="k4_hub",
        graph=build_graph(4, [
            (0, 1, 1.0),
            (0, 2, 1.0),
            (0, 3, 1.0),
            (1, 2, 2.0),
            (1, 3, 2.0),
            (2, 3, 2.0)
        ]),
        routes={
            "R1": Route.of(0, 1, 2, 3, 1, 0, 2, 0, 3, 0),
            "R2": Route.of(0, 1, 2, 0, 1, 3, 0, 2, 3, 0)
        },
        expected_aoi={"R1": 49.333, "R2": 45.778},
        expected_length={"R1": 12.0, "R2": 12.0}
    )


def tight_split() -> CorpusInstance:
    """Route reaching the F1 lower bound with E2 = {(1, 3)}."""
    return CorpusInstance(
        name="tight_split",
        graph=build_graph(4, [
            (0, 1, 1.0),
            (1, 3, 1.0),
            (3, 2, 1.0),
            (2, 1, 1.0),
            (3, 0, 1.0)
        ]),
        routes={"R": Route.of(0, 1, 3, 2, 1, 3, 0)},
        expected_aoi={"R": 13.5},
        expected_length={"R": 6.0}
    )


def triangle_spokes(m: int = 5) -> CorpusInstance:
    """Unit triangle 0-1-2 with m spokes of length 1/m at node 0.

    Route R0 walks the triangle once and every spoke back and forth; its AoI
    approaches the F1 upper bound 10 as m grows.
    """
    edges: list[tuple[int, int, float]] = [
        (0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)
    ]
    nodes: list[int] = [0, 1, 2, 0]
    for leaf in range(3, 3 + m):
        edges.append((0, leaf, 1.0 / m))
        nodes.extend([leaf, 0])
    return CorpusInstance(
        name="triangle_spokes",
        graph=build_graph(3 + m, edges),
        routes={"R0": Route(nodes=tuple(nodes))},
        expected_aoi={"R0": 10.0 + 4.0 / (15.0 * m * m) - 1.0 / m},
        expected_length={"R0": 5.0}
    )


def even_spacing() -> CorpusInstance:
    """Doubling more edges with even spacing beats the shorter routes."""
    return CorpusInstance(
        name="even_spacing",
        graph=build_graph(5, [
            (0, 1, 1.0),
            (0, 2, 1.0),
            (0, 4, 2.0),
            (1, 3, 1.0),
            (2, 3, 1.0),
            (3, 4, 2.0)
        ]),
        routes={
            "R1": Route.of(0, 2, 3, 1, 0, 4, 3, 1, 0),
            "R2": Route.of(0, 1, 3, 4, 0, 2, 3, 4, 0),
            "R3": Route.of(0, 1, 3, 4, 0, 2, 3, 1, 0, 4, 3, 2, 0)
        },
        expected_aoi={"R1": 35.2, "R2": 36.0, "R3": 33.67}
    )


def wheel(a: float = WHEEL_RING_LENGTH) -> CorpusInstance:
    """Wheel with unit spokes and ring edges of length a.

    R1 is a CPP route, R2 is longer and has smaller AoI.
    """
    edges: list[tuple[int, int, float]] = [
        (0, leaf, 1.0) for leaf in range(1, 6)
    ]
    edges.extend((leaf, leaf % 5 + 1, a) for leaf in range(1, 6))
    return CorpusInstance(
        name="wheel",
        graph=build_graph(6, edges),
        routes={
            "R1": Route.of(0, 1, 2, 0, 3, 4, 0, 5, 1, 0, 2, 3, 0, 4, 5, 0),
            "R2": Route.of(0, 1, 2, 0, 3, 4, 0, 5, 1, 2, 3, 4, 5, 0)
        },
        expected_aoi={"R1": 126.149, "R2": 125.907},
        expected_length={"R1": 10.0 + 5 * a, "R2": 6.0 + 7 * a}
    )


CORPUS: dict[str, Callable[[], CorpusInstance]] = {
    "single_edge": single_edge,
    "triangle": triangle,
    "k4_hub": k4_hub,
    "tight_split": tight_split,
    "triangle_spokes": triangle_spokes,
    "even_spacing": even_spacing,
    "wheel": wheel
}


def find_instance(name: str) -> CorpusInstance:
    """Builds corpus instance by its name.

    Raises:
        UnknownInstanceError:
            No instance with such name.
    """
    try:
        return CORPUS[name]()
    except KeyError as err:
        raise UnknownInstanceError(
            f"unknown corpus instance {name!r}, available:"
            f" {', '.join(sorted(CORPUS))}"
        ) from err


def corpus_graphs() -> list[Graph]:
    return [make().graph for make in CORPUS.values()]
