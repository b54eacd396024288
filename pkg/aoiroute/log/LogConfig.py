from aoiroute.config.Config import Config
from aoiroute.log.LogHandler import LogHandler


class LogConfig(Config):
    """Handlers added on boot, read from the "Log" app rc section.

    Loguru's default stderr handler stays in place, so an empty list keeps
    plain console output.
    """
    handlers: list[LogHandler] = []
