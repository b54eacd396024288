from aoiroute.euler.TraversalState import Candidate, TraversalState


class EdgeSelector:
    """Chooses next copy for Fleury walks.

    Should implement method select(...) returning one of the given
    candidates. The choice should be deterministic given the selector's own
    seed or state.
    """
    def select(
        self,
        state: TraversalState,
        candidates: list[Candidate]
    ) -> Candidate:
        raise NotImplementedError()
