from enum import Enum


class BootMode(Enum):
    """Mode of a run, selecting app rc sections and log defaults."""
    TEST = "test"
    DEV = "dev"
    PROD = "prod"

    @property
    def default_log_level(self) -> str:
        return "INFO" if self is BootMode.PROD else "DEBUG"

    @property
    def is_log_serialized(self) -> bool:
        """Whether handlers write JSON lines by default."""
        return self is BootMode.PROD
