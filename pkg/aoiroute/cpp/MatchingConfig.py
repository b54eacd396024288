from aoiroute.config.Config import Config
from aoiroute.validation import model_validator


class MatchingConfig(Config):
    """
    Attributes:
        max_odd_nodes:
            Largest odd node set solved by the exact subset matching.
    """
    max_odd_nodes: int = 20

    @model_validator("max_odd_nodes")
    def check_max_odd_nodes(cls, value: int) -> int:
        if value < 2:
            raise ValueError("at least a pair of odd nodes should be allowed")
        return value
