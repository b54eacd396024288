from aoiroute.config.Config import Config
from aoiroute.validation import model_validator


class SimulationConfig(Config):
    """Resolution of the discretized AoI simulation.

    Attributes:
        dx:
            Spacing of the points along every edge.
        dt:
            Time step; the walker moves at unit speed.
        warmup_periods:
            Periods simulated before measuring, at least 2.
        measure_periods:
            Periods averaged over, at least 1.
    """
    dx: float = 1e-3
    dt: float = 1e-3
    warmup_periods: int = 2
    measure_periods: int = 4

    @model_validator("dx", "dt")
    def check_positive(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("resolution should be positive")
        return value

    @model_validator("warmup_periods")
    def check_warmup(cls, value: int) -> int:
        if value < 2:
            raise ValueError("at least 2 warmup periods are required")
        return value

    @model_validator("measure_periods")
    def check_measure(cls, value: int) -> int:
        if value < 1:
            raise ValueError("at least 1 measured period is required")
        return value
