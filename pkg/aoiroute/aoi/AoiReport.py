from aoiroute.model.Model import Model


class EdgeAoi(Model):
    edge_id: int
    u: int
    v: int
    accumulated: float


class AoiReport(Model):
    """Evaluated time-average AoI of a route.

    Attributes:
        average_aoi:
            Sum of per-edge accumulated AoI divided by route_length.
        route_length:
            Period l(R).
        e1_length:
            Total length of edges traversed once.
        e2_length:
            Total length of edges traversed twice.
        per_edge:
            Accumulated AoI over one period per edge, in edge id order.
    """
    average_aoi: float
    route_length: float
    e1_length: float
    e2_length: float
    per_edge: list[EdgeAoi]

    @property
    def per_edge_accumulated(self) -> dict[int, float]:
        return {x.edge_id: x.accumulated for x in self.per_edge}

    class Config:
        allow_mutation = False
