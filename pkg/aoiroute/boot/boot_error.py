from aoiroute.boot.BootMode import BootMode
from aoiroute.error.Error import Error


class BootError(Error):
    """Process environment cannot be booted."""


class UnknownBootModeError(BootError):
    """Mode given through environment is not one of BootMode values."""
    def __init__(self, mode: str) -> None:
        super().__init__(
            f"unknown boot mode {mode!r}, expected one of"
            f" {[m.value for m in BootMode]}"
        )
