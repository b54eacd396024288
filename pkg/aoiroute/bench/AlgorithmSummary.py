from aoiroute.model.Model import Model


class AlgorithmSummary(Model):
    """Ratio statistics of one algorithm over an experiment."""
    algorithm: str
    count: int
    mean: float
    median: float
    p95: float

    class Config:
        allow_mutation = False
