from aoiroute.config.Config import Config
from aoiroute.validation import model_validator


class OracleConfig(Config):
    """Limits of the exhaustive search.

    Attributes:
        max_edges:
            Largest edge count whose duplication subsets are enumerated.
        max_states:
            Search states visited before giving up, summed over all
            multigraphs of one call.
    """
    max_edges: int = 12
    max_states: int = 10 ** 7

    @model_validator("max_edges", "max_states")
    def check_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("oracle limits should be positive")
        return value
