from collections import deque

from aoiroute.aoi.visit_gap import (
    edge_aoi_single_visit,
    edge_aoi_two_visits,
    visit_gap_same,
)
from aoiroute.graph.Edge import Edge
from aoiroute.graph.MultiGraph import MultiGraph
from aoiroute.oracle.oracle_error import BudgetExceededError

# Relative margin a candidate should beat the incumbent by
IMPROVEMENT_TOLERANCE: float = 1e-12


class CycleSearch:
    """Branch and bound over the Eulerian cycles of one multigraph.

    Cycles start at node 0 and treat parallel copies as indistinct. Moves
    follow Fleury's rule, so every branch ends in a complete cycle. A branch
    is cut once its lower bound reaches the incumbent value.

    The bound sums per edge accumulated AoI over one period:
    - edges appearing once contribute ½·l(E'')²·l exactly;
    - doubled edges with both visits placed contribute their exact value;
    - doubled edges with one visit placed contribute the least value over
      the still possible positions of the second visit;
    - unvisited doubled edges contribute ¼·l·l(E'')², the value of evenly
      spaced visits.

    Attributes:
        best_aoi:
            Incumbent value, lowered when a better cycle is found.
        best_nodes:
            Node sequence of the best cycle found by this search, None if
            nothing beat the initial incumbent.
        state_count:
            Visited search states.
    """
    def __init__(
        self,
        mg: MultiGraph,
        *,
        best_aoi: float,
        max_states: int
    ) -> None:
        self.best_aoi: float = best_aoi
        self.best_nodes: tuple[int, ...] | None = None
        self.state_count: int = 0

        self.__mg: MultiGraph = mg
        self.__max_states: int = max_states
        self.__period: float = mg.total_length

        n: int = mg.node_count
        self.__remaining: list[list[int]] = [[0] * n for _ in range(n)]
        self.__edges: list[list[Edge | None]] = [[None] * n for _ in range(n)]
        self.__degree_left: list[int] = [mg.degree(v) for v in range(n)]
        self.__copies_left: int = mg.copy_count

        self.__fixed: float = 0.0
        for e in mg.base.edges:
            count: int = mg.multiplicity[e.id]
            self.__remaining[e.u][e.v] = self.__remaining[e.v][e.u] = count
            self.__edges[e.u][e.v] = self.__edges[e.v][e.u] = e
            if count == 1:
                self.__fixed += edge_aoi_single_visit(e.length, self.__period)
            else:
                self.__fixed += self.__even_value(e.length)

        self.__first_visits: dict[int, tuple[float, bool]] = {}
        self.__exact: dict[int, float] = {}
        self.__nodes: list[int] = [0]
        self.__position: float = 0.0

    def run(self) -> None:
        """
        Raises:
            BudgetExceededError:
                More than max_states states were visited.
        """
        self.__walk(0)

    def __walk(self, v: int) -> None:
        self.state_count += 1
        if self.state_count > self.__max_states:
            raise BudgetExceededError(
                f"search visited more than {self.__max_states} states"
            )

        threshold: float = self.best_aoi * (1 - IMPROVEMENT_TOLERANCE)
        if self.__copies_left == 0:
            value: float = self.__fixed / self.__period
            if value < threshold:
                self.best_aoi = value
                self.best_nodes = tuple(self.__nodes)
            return
        if self.__bound() >= threshold:
            return

        for u in self.__eligible(v):
            self.__traverse(v, u)
            self.__walk(u)
            self.__untraverse(v, u)

    def __eligible(self, v: int) -> list[int]:
        neighbors: list[int] = [
            u for u, count in enumerate(self.__remaining[v]) if count > 0
        ]
        keeping: list[int] = [
            u for u in neighbors if self.__keeps_reachable(v, u)
        ]
        return keeping if keeping else neighbors

    def __keeps_reachable(self, v: int, u: int) -> bool:
        self.__remaining[v][u] -= 1
        self.__remaining[u][v] -= 1
        self.__degree_left[v] -= 1
        self.__degree_left[u] -= 1

        visited: set[int] = {u}
        queue: deque[int] = deque([u])
        while queue:
            a: int = queue.popleft()
            for b, count in enumerate(self.__remaining[a]):
                if count > 0 and b not in visited:
                    visited.add(b)
                    queue.append(b)
        is_keeping: bool = all(
            degree == 0 or node in visited
            for node, degree in enumerate(self.__degree_left)
        )

        self.__remaining[v][u] += 1
        self.__remaining[u][v] += 1
        self.__degree_left[v] += 1
        self.__degree_left[u] += 1
        return is_keeping

    def __traverse(self, v: int, u: int) -> None:
        edge: Edge = self.__edge(v, u)
        start: float = self.__position

        self.__remaining[v][u] -= 1
        self.__remaining[u][v] -= 1
        self.__degree_left[v] -= 1
        self.__degree_left[u] -= 1
        self.__copies_left -= 1
        self.__position += edge.length
        self.__nodes.append(u)

        if self.__mg.multiplicity[edge.id] == 1:
            return
        is_forward: bool = edge.is_forward(v)
        first: tuple[float, bool] | None = self.__first_visits.get(edge.id)
        if first is None:
            self.__first_visits[edge.id] = (start, is_forward)
            self.__fixed -= self.__even_value(edge.length)
            return

        d1: float = max(0.0, start - first[0] - edge.length)
        d2: float = max(0.0, self.__period - 2 * edge.length - d1)
        exact: float = edge_aoi_two_visits(
            edge.length, d1, d2, is_same_direction=first[1] == is_forward
        )
        self.__exact[edge.id] = exact
        self.__fixed += exact

    def __untraverse(self, v: int, u: int) -> None:
        edge: Edge = self.__edge(v, u)

        self.__nodes.pop()
        self.__position -= edge.length
        self.__copies_left += 1
        self.__degree_left[v] += 1
        self.__degree_left[u] += 1
        self.__remaining[v][u] += 1
        self.__remaining[u][v] += 1

        if self.__mg.multiplicity[edge.id] == 1:
            return
        exact: float | None = self.__exact.pop(edge.id, None)
        if exact is not None:
            self.__fixed -= exact
            return
        del self.__first_visits[edge.id]
        self.__fixed += self.__even_value(edge.length)

    def __bound(self) -> float:
        total: float = self.__fixed
        for edge_id, (start, _) in self.__first_visits.items():
            if edge_id in self.__exact:
                continue
            length: float = self.__mg.base.edges[edge_id].length
            elapsed: float = max(0.0, self.__position - start - length)
            slack: float = self.__period - 2 * length
            if elapsed <= slack / 2:
                total += self.__even_value(length)
            else:
                total += visit_gap_same(length, elapsed) + visit_gap_same(
                    length, max(0.0, slack - elapsed)
                )
        return total / self.__period

    def __even_value(self, length: float) -> float:
        return 0.25 * length * self.__period ** 2

    def __edge(self, v: int, u: int) -> Edge:
        edge: Edge | None = self.__edges[v][u]
        if edge is None:
            raise ValueError(f"no edge between {v} and {u}")
        return edge
