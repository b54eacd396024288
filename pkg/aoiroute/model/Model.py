import json
from typing import TYPE_CHECKING, Any, ClassVar

if TYPE_CHECKING:
    from typing_extensions import Self

import pydantic


class Model(pydantic.BaseModel):
    """Basic way to represent a data in the package.

    Attributes:
        API_TYPE:
            Text type to be added to the "type" field of JSON output.
            Defaults to class name.
    """
    API_TYPE: ClassVar[str | None] = None

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)

    def __str__(self) -> str:
        return f"{self.__class__.__name__}({super().__str__()})"

    @property
    def api(self) -> dict:
        """Generates JSON-compatible dictionary with the model's type
        attached.
        """
        return {
            "type": self.API_TYPE or self.__class__.__name__,
            "value": json.loads(self.json())
        }

    @classmethod
    def recover(cls, mp: dict) -> "Self":
        """Recovers model of this class using dictionary produced by api."""
        expected_type: str = cls.API_TYPE or cls.__name__
        if mp.get("type") != expected_type:
            raise ValueError(
                f"cannot recover {cls} from type {mp.get('type')}"
            )
        return cls.parse_obj(mp["value"])
