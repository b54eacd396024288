from typing import Any

from aoiroute import validation
from aoiroute.aoi.aoi_error import (
    NotClosedWalkError,
    RouteError,
    RouteParsingError,
)
from aoiroute.model.Model import Model


class Route(Model):
    """Periodic route given as a closed node sequence R[0..M], R[0] = R[M].

    The route holds node ids only; graph-dependent checks are made by the
    functions receiving both the graph and the route.
    """
    nodes: tuple[int, ...]

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)
        if len(self.nodes) < 2:
            raise RouteError(
                f"route {self.nodes} should contain at least two nodes"
            )
        if any(v < 0 for v in self.nodes):
            raise RouteError(f"route {self.nodes} contains negative ids")

    @classmethod
    def of(cls, *nodes: int) -> "Route":
        return cls(nodes=nodes)

    @classmethod
    def parse(cls, text: str) -> "Route":
        """Parses comma-separated node ids, e.g. "0,1,2,0".

        Raises:
            RouteParsingError:
                Text is not a list of at least two non-negative integers.
        """
        try:
            validation.validate_route_text(text)
        except validation.ReValidationError as err:
            raise RouteParsingError(
                f"cannot parse route from {text!r}"
            ) from err
        return cls(nodes=tuple(int(x) for x in text.split(",")))

    @property
    def is_closed(self) -> bool:
        return self.nodes[0] == self.nodes[-1]

    @property
    def step_count(self) -> int:
        return len(self.nodes) - 1

    def format(self) -> str:
        return ",".join(str(v) for v in self.nodes)

    def rotated(self, shift: int) -> "Route":
        """Same cycle started at position shift of the node sequence.

        Raises:
            NotClosedWalkError:
                Route is not closed.
        """
        self.__check_closed()
        body: tuple[int, ...] = self.nodes[:-1]
        shift %= len(body)
        rotated_body: tuple[int, ...] = body[shift:] + body[:shift]
        return Route(nodes=rotated_body + (rotated_body[0],))

    def reversed(self) -> "Route":
        self.__check_closed()
        return Route(nodes=tuple(reversed(self.nodes)))

    def __check_closed(self) -> None:
        if not self.is_closed:
            raise NotClosedWalkError(f"route {self.format()} is not closed")

    class Config:
        allow_mutation = False
