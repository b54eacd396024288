from enum import Enum

from aoiroute.model.Model import Model


class Direction(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


class Visit(Model):
    """Edge traversal starting at route-length coordinate start."""
    start: float
    direction: Direction

    class Config:
        allow_mutation = False


class VisitSchedule(Model):
    """Visits of every edge within one period of length period.

    Attributes:
        visits:
            Ordered visits per edge id.
        period:
            Route length l(R).
    """
    visits: dict[int, list[Visit]]
    period: float

    def visit_count(self, edge_id: int) -> int:
        return len(self.visits.get(edge_id, []))

    class Config:
        allow_mutation = False
