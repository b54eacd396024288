import heapq

from aoiroute.graph.Graph import Graph
from aoiroute.graph.graph_error import DisconnectedGraphError
from aoiroute.model.Model import Model

# Dijkstra label: distance, hop count, node sequence from the source
_Label = tuple[float, int, tuple[int, ...]]


class ShortestPathTable(Model):
    """All-pairs shortest distances with one reconstructible path per pair.

    Among equally short paths the one with fewer hops is kept, then the
    lexicographically smallest node sequence (taken from the smaller end
    node), so dist is symmetric and paths are mirrored.
    """
    dist: list[list[float]]
    paths: list[list[tuple[int, ...]]]

    def distance(self, a: int, b: int) -> float:
        return self.dist[a][b]

    def path(self, a: int, b: int) -> tuple[int, ...]:
        return self.paths[a][b]

    class Config:
        allow_mutation = False


def apsp(g: Graph) -> ShortestPathTable:
    """Computes shortest paths between all node pairs.

    Raises:
        DisconnectedGraphError:
            Some pair of nodes is not connected.
    """
    labels: list[list[_Label]] = [
        __dijkstra(g, source) for source in range(g.node_count)
    ]

    dist: list[list[float]] = [
        [0.0] * g.node_count for _ in range(g.node_count)
    ]
    paths: list[list[tuple[int, ...]]] = [
        [(a,)] * g.node_count for a in range(g.node_count)
    ]
    for a in range(g.node_count):
        for b in range(a + 1, g.node_count):
            label: _Label = labels[a][b]
            dist[a][b] = dist[b][a] = label[0]
            paths[a][b] = label[2]
            paths[b][a] = tuple(reversed(label[2]))

    return ShortestPathTable(dist=dist, paths=paths)


def __dijkstra(g: Graph, source: int) -> list[_Label]:
    best: list[_Label | None] = [None] * g.node_count
    queue: list[_Label] = [(0.0, 0, (source,))]
    while queue:
        label: _Label = heapq.heappop(queue)
        v: int = label[2][-1]
        if best[v] is not None:
            continue
        best[v] = label
        for edge in g.incident(v):
            u: int = edge.other(v)
            if best[u] is None:
                heapq.heappush(
                    queue,
                    (label[0] + edge.length, label[1] + 1, label[2] + (u,))
                )

    if any(label is None for label in best):
        raise DisconnectedGraphError(
            f"not every node is reachable from node {source}"
        )
    return best  # type: ignore[return-value]
