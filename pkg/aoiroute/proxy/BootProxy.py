from pathlib import Path

from aoiroute.app_rc.AppRC import AppRC
from aoiroute.boot.BootMode import BootMode
from aoiroute.worker.Worker import Worker


class BootProxy(Worker):
    """Proxy data to let configs read boot results without importing the Boot
    worker directly (and avoid circular imports by this).
    """
    def __init__(
        self,
        *,
        root_dir: Path,
        mode: BootMode,
        app_rc: AppRC
    ) -> None:
        super().__init__()
        self.__root_dir: Path = root_dir
        self.__mode: BootMode = mode
        self.__app_rc: AppRC = app_rc

    @property
    def root_dir(self) -> Path:
        return self.__root_dir

    @property
    def mode(self) -> BootMode:
        return self.__mode

    @property
    def app_rc(self) -> AppRC:
        return self.__app_rc
