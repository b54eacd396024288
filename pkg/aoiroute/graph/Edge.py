from typing import NamedTuple

from aoiroute.model.Model import Model


class Edge(Model):
    """Undirected weighted edge.

    The order (u, v) is the canonical orientation: a traversal from u to v is
    forward, from v to u is backward.
    """
    id: int
    u: int
    v: int
    length: float

    @property
    def pair(self) -> tuple[int, int]:
        return (min(self.u, self.v), max(self.u, self.v))

    def other(self, node: int) -> int:
        if node == self.u:
            return self.v
        if node == self.v:
            return self.u
        raise ValueError(f"node {node} is not an end of edge {self.id}")

    def is_forward(self, start: int) -> bool:
        return start == self.u

    class Config:
        allow_mutation = False


class EdgeCopy(NamedTuple):
    """One parallel copy of an edge inside a multigraph."""
    copy_id: int
    edge: Edge


def make_copy_id(edge_id: int, index: int) -> int:
    """Copy ids are dense: copies of edge e get ids 2e and 2e + 1."""
    return 2 * edge_id + index


def edge_id_of_copy(copy_id: int) -> int:
    return copy_id // 2
