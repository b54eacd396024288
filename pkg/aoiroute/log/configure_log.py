from pathlib import Path

from aoiroute import validation
from aoiroute.boot.BootMode import BootMode
from aoiroute.log.Log import Log
from aoiroute.log.LogConfig import LogConfig
from aoiroute.log.LogHandler import LogHandler


def configure_log(config: LogConfig, mode: BootMode) -> list[int]:
    """Adds handlers from given config to the logger.

    Returns:
        Ids of the added loguru handlers.
    """
    validation.validate(config, LogConfig)
    validation.validate(mode, BootMode)

    handler_ids: list[int] = []
    for handler in config.handlers:
        handler_ids.append(__add_handler(handler, mode))
    return handler_ids


def __add_handler(handler: LogHandler, mode: BootMode) -> int:
    if handler.level is None:
        handler.level = mode.default_log_level
    if handler.serialize is None:
        handler.serialize = mode.is_log_serialized

    extra_kwargs: dict = dict(handler.kwargs)
    # Loguru accepts rotation only for path-like sinks
    if isinstance(handler.sink, str | Path) and handler.rotation is not None:
        extra_kwargs["rotation"] = handler.rotation

    return Log.add(
        handler.sink,
        level=handler.level,
        format=handler.format,
        serialize=handler.serialize,
        **extra_kwargs
    )
