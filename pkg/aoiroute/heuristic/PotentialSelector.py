from aoiroute.cpp.ShortestPathTable import ShortestPathTable
from aoiroute.euler.EdgeSelector import EdgeSelector
from aoiroute.euler.TraversalState import Candidate, TraversalState
from aoiroute.heuristic.potential import potential


class PotentialSelector(EdgeSelector):
    """Picks the eligible copy of the highest potential.

    Candidates come ordered by neighbor and copy id, and only a strictly
    higher potential replaces the current best, so ties go to the smallest
    neighbor and then the smallest copy.
    """
    def __init__(self, table: ShortestPathTable, epsilon: float) -> None:
        self.__table: ShortestPathTable = table
        self.__epsilon: float = epsilon

    def select(
        self,
        state: TraversalState,
        candidates: list[Candidate]
    ) -> Candidate:
        if not candidates:
            raise ValueError("no candidates to select from")

        best: Candidate = candidates[0]
        best_potential: float = potential(
            state, best, self.__table, self.__epsilon
        )
        for c in candidates[1:]:
            value: float = potential(state, c, self.__table, self.__epsilon)
            if value > best_potential:
                best = c
                best_potential = value
        return best
