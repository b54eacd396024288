import os
from pathlib import Path

import dotenv

from aoiroute.app_rc.AppRC import AppRC
from aoiroute.app_rc.merge_app_rc import merge_app_rc
from aoiroute.boot.boot_error import UnknownBootModeError
from aoiroute.boot.BootMode import BootMode
from aoiroute.file.file_error import NotDirError
from aoiroute.log.configure_log import configure_log
from aoiroute.log.Log import Log
from aoiroute.log.LogConfig import LogConfig
from aoiroute.proxy.BootProxy import BootProxy
from aoiroute.validation import validate
from aoiroute.worker.Worker import Worker


class Boot(Worker):
    """Worker responsible of booting a command line run.

    Resolves mode, root directory and app rc, publishes them through
    BootProxy so configs can load their sections, and configures logging.

    Attributes:
        dotenv_path (optional):
            Path to .env file. Defaults to ".env".

    Environs:
        AoiRoute_Mode:
            Boot mode. Defaults to DEV.
        AoiRoute_RootDir:
            Root directory. Defaults to os.getcwd().
        AoiRoute_AppRCPath:
            Path where app configuration file located, relative to the root
            directory. Defaults to "./apprc.yml".

    Usage:
    ```py
    from aoiroute.boot.Boot import Boot
    from aoiroute.heuristic.HeuristicConfig import HeuristicConfig

    Boot()
    config: HeuristicConfig = HeuristicConfig.load()
    ```
    """
    @Log.catch(reraise=True)
    def __init__(
        self,
        *,
        dotenv_path: Path | None = None
    ) -> None:
        super().__init__()
        if dotenv_path is None:
            dotenv_path = Path(".env")
        validate(dotenv_path, Path)

        dotenv.load_dotenv(dotenv_path, override=True)

        self.__mode: BootMode = self.__parse_mode()
        self.__root_dir: Path = self.__parse_root_dir()
        self.__app_rc: AppRC = self.__parse_app_rc(
            self.__root_dir,
            self.__mode
        )

        BootProxy(
            root_dir=self.__root_dir,
            mode=self.__mode,
            app_rc=self.__app_rc
        )

        handler_ids: list[int] = configure_log(
            LogConfig.load(), self.__mode
        )
        Log.bind(mode=self.__mode.value, handlers=len(handler_ids)).debug(
            f"booted in {self.__root_dir}"
        )

    @property
    def mode(self) -> BootMode:
        return self.__mode

    @property
    def root_dir(self) -> Path:
        return self.__root_dir

    @property
    def app_rc(self) -> AppRC:
        return self.__app_rc

    def __parse_mode(self) -> BootMode:
        mode_env: str | None = os.getenv("AoiRoute_Mode")

        if not mode_env:
            return BootMode.DEV

        try:
            return BootMode(mode_env)
        except ValueError as err:
            raise UnknownBootModeError(mode_env) from err

    def __parse_root_dir(self) -> Path:
        root_dir: Path
        root_dir_env: str = os.getenv("AoiRoute_RootDir", "")

        if not root_dir_env:
            root_dir = Path(os.getcwd())
        else:
            root_dir = Path(root_dir_env)

        if not root_dir.is_dir():
            raise NotDirError(
                f"{root_dir} is not a directory"
            )

        return root_dir

    def __parse_app_rc(self, root_dir: Path, mode: BootMode) -> AppRC:
        rc_path_env: str = os.getenv("AoiRoute_AppRCPath", "")

        if not rc_path_env:
            # On default path no errors raised if file is not found or empty
            return merge_app_rc(Path(root_dir, "apprc.yml"), mode)

        # Absolute env path overrides root dir on pathlib joining
        return merge_app_rc(
            Path(root_dir, rc_path_env), mode, is_explicit=True
        )
