from aoiroute.aoi.Route import Route
from aoiroute.model.Model import Model


class OptimalRoute(Model):
    """Best route found by exhaustive search.

    Attributes:
        route:
            Witness route starting at node 0.
        aoi:
            Its time-average AoI.
        duplicated:
            Ids of the edges the witness traverses twice.
        state_count:
            Search states visited.
    """
    route: Route
    aoi: float
    duplicated: frozenset[int]
    state_count: int

    class Config:
        allow_mutation = False
