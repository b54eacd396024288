from aoiroute.config.Config import Config
from aoiroute.validation import model_validator


class GenerationConfig(Config):
    """Rejection sampling settings for random graphs.

    Attributes:
        max_attempts:
            Number of draws after which generation gives up.
    """
    max_attempts: int = 10000

    @model_validator("max_attempts")
    def check_max_attempts(cls, value: int) -> int:
        if value < 1:
            raise ValueError("max_attempts should be at least 1")
        return value
