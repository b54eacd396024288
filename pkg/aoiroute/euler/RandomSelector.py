import numpy as np

from aoiroute.euler.EdgeSelector import EdgeSelector
from aoiroute.euler.TraversalState import Candidate, TraversalState
from aoiroute.rnd import make_rng


class RandomSelector(EdgeSelector):
    """Picks next node uniformly among eligible neighbors.

    Parallel copies towards the same neighbor count once, and the first of
    them is taken.
    """
    def __init__(self, seed: int) -> None:
        self.__rng: np.random.Generator = make_rng(seed)

    def select(
        self,
        state: TraversalState,
        candidates: list[Candidate]
    ) -> Candidate:
        first_by_neighbor: dict[int, Candidate] = {}
        for c in candidates:
            first_by_neighbor.setdefault(c.neighbor, c)
        neighbors: list[int] = sorted(first_by_neighbor)
        chosen: int = neighbors[int(self.__rng.integers(len(neighbors)))]
        return first_by_neighbor[chosen]
