from aoiroute.bench.Algorithm import Algorithm
from aoiroute.config.Config import Config
from aoiroute.rnd import validate_seed
from aoiroute.validation import ValidationError, model_validator


class ExperimentConfig(Config):
    """Batch of random graphs every chosen algorithm is run on.

    Attributes:
        n:
            Nodes per graph.
        p:
            Edge probability of G(n, p), in (0, 1).
        graph_count:
            Number of generated graphs.
        seed:
            Master seed; graph and trial seeds are derived from it.
        algorithms:
            Algorithms to run, in output order.
        random_trials_per_graph:
            Runs of each random algorithm per graph.
        length_low:
            Exclusive lower bound of uniform edge lengths.
        length_high:
            Exclusive upper bound of uniform edge lengths.
    """
    n: int = 10
    p: float = 0.2
    graph_count: int = 200
    seed: int = 0
    algorithms: list[Algorithm] = list(Algorithm)
    random_trials_per_graph: int = 1
    length_low: float = 0.0
    length_high: float = 10.0

    @model_validator("n")
    def check_n(cls, value: int) -> int:
        if value < 3:
            raise ValueError("n should be at least 3")
        return value

    @model_validator("p")
    def check_p(cls, value: float) -> float:
        if not 0 < value < 1:
            raise ValueError("p should be in (0, 1)")
        return value

    @model_validator("graph_count", "random_trials_per_graph")
    def check_count(cls, value: int) -> int:
        if value < 1:
            raise ValueError("counts should be at least 1")
        return value

    @model_validator("seed")
    def check_seed(cls, value: int) -> int:
        try:
            validate_seed(value)
        except ValidationError as err:
            raise ValueError(err.message) from err
        return value

    @model_validator("algorithms")
    def check_algorithms(cls, value: list[Algorithm]) -> list[Algorithm]:
        if not value:
            raise ValueError("at least one algorithm should be chosen")
        if len(set(value)) != len(value):
            raise ValueError("algorithms should not repeat")
        return value

    @model_validator("length_high")
    def check_lengths(cls, value: float, values: dict) -> float:
        low: float | None = values.get("length_low")
        if low is not None and (low < 0 or value <= low):
            raise ValueError(
                "lengths should satisfy 0 <= length_low < length_high"
            )
        return value
