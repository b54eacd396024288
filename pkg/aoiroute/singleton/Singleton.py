from __future__ import annotations

import contextlib
from typing import TypeVar

SingletonInstance = TypeVar("SingletonInstance")


class SingletonMeta(type):
    """Metaclass keeping one instance per class.

    Boot state (mode, root dir, app rc) is published once per process
    through singletons, and tests discard them between runs.
    """
    __instances: dict[type, object] = {}

    def __call__(cls, *args, **kwargs):
        if cls not in cls.__instances:
            cls.__instances[cls] = super().__call__(*args, **kwargs)
        return cls.__instances[cls]

    @property
    def is_initialized(cls) -> bool:
        return cls in cls.__instances

    def discard(cls, should_validate: bool = True) -> None:
        if should_validate and not cls.is_initialized:
            raise ValueError(
                f"cannot discard - class {cls} not initialized"
            )
        with contextlib.suppress(KeyError):
            del cls.__instances[cls]


class Singleton(metaclass=SingletonMeta):
    @classmethod
    def ie(cls: type[SingletonInstance]) -> SingletonInstance:
        """Gets the single instance of the Singleton.

        Raises:
            TypeError:
                The instance has not been created yet and the class requires
                constructor arguments.
        """
        return cls()
