import re
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from typing_extensions import Self

from aoiroute import validation
from aoiroute.app_rc.AppRC import AppRC
from aoiroute.model.Model import Model
from aoiroute.proxy.BootProxy import BootProxy


class Config(Model):
    """Object holding configuration for some part of the package.

    Configs are read from the app rc section named after the class without
    "Config" suffix, e.g. "Heuristic" section for HeuristicConfig. Without a
    boot the model defaults are used.
    """
    @classmethod
    def load(cls, *, extra: dict[str, Any] | None = None) -> "Self":
        if not extra:
            extra = {}

        validation.validate_dict(extra, (str, validation.Validator.SKIP))

        app_rc: AppRC = {}
        if BootProxy.is_initialized:
            app_rc = BootProxy.ie().app_rc
        config_kwargs: dict[str, Any] = app_rc.get(
            cls._convert_name_to_rc_format(),
            {}
        )
        if config_kwargs is None:
            config_kwargs = {}
        return cls(**{**validation.apply(config_kwargs, dict), **extra})

    @classmethod
    def _convert_name_to_rc_format(cls) -> str:
        cleaned_name: str = cls.__name__
        if re.match(r"^.+config$", cls.__name__.lower()):
            cleaned_name = cls.__name__[:len(cls.__name__) - 6]
        return cleaned_name

    class Config:
        arbitrary_types_allowed = True
