from aoiroute.model.Model import Model


class ResultRow(Model):
    """One algorithm run on one graph.

    Attributes:
        graph_id:
            Index of the graph within its experiment.
        seed:
            Seed the graph was generated from.
        lower_bound:
            ½·l(E)² of the graph.
        ratio:
            aoi / lower_bound.
        elapsed_ms:
            Wall time of route construction, excluded from reproducibility.
    """
    graph_id: int
    n: int
    p: float
    seed: int
    edge_count: int
    total_length: float
    lower_bound: float
    algorithm: str
    aoi: float
    ratio: float
    route_length: float
    elapsed_ms: float

    class Config:
        allow_mutation = False


CSV_HEADER: list[str] = list(ResultRow.__fields__.keys())
