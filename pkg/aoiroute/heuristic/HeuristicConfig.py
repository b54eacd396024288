from aoiroute.config.Config import Config
from aoiroute.validation import model_validator


class HeuristicConfig(Config):
    """
    Attributes:
        epsilon:
            Margin added to half of the multigraph length when a doubled
            edge is entered for the first time.
    """
    epsilon: float = 0.01

    @model_validator("epsilon")
    def check_epsilon(cls, value: float) -> float:
        if value < 0:
            raise ValueError("epsilon should be non-negative")
        return value
