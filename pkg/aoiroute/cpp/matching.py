from functools import lru_cache

from aoiroute import validation
from aoiroute.cpp.cpp_error import TooManyOddNodesError
from aoiroute.cpp.MatchingConfig import MatchingConfig
from aoiroute.cpp.ShortestPathTable import ShortestPathTable
from aoiroute.model.Model import Model


class Matching(Model):
    pairs: list[tuple[int, int]]
    total_cost: float

    class Config:
        allow_mutation = False


def min_weight_perfect_matching(
    odd: list[int],
    table: ShortestPathTable,
    *,
    config: MatchingConfig | None = None
) -> Matching:
    """Pairs given nodes minimizing the total shortest distance.

    Exact dynamic programming over subsets: the smallest unmatched node is
    paired with every other unmatched node in turn. Among equal costs the
    first found pairing (by ascending node ids) is kept.

    Raises:
        ValidationError:
            Odd number of nodes.
        TooManyOddNodesError:
            More nodes than MatchingConfig.max_odd_nodes.
    """
    validation.validate_each(odd, int)
    if config is None:
        config = MatchingConfig.load()
    nodes: list[int] = sorted(set(odd))
    if len(nodes) != len(odd) or len(nodes) % 2 != 0:
        raise validation.ValidationError(
            f"nodes {odd} should be distinct and of even count"
        )
    if len(nodes) > config.max_odd_nodes:
        raise TooManyOddNodesError(len(nodes), config.max_odd_nodes)

    count: int = len(nodes)
    full_mask: int = (1 << count) - 1

    @lru_cache(maxsize=None)
    def solve(mask: int) -> tuple[float, tuple[tuple[int, int], ...]]:
        if mask == full_mask:
            return 0.0, ()
        i: int = 0
        while mask & (1 << i):
            i += 1
        best_cost: float = float("inf")
        best_pairs: tuple[tuple[int, int], ...] = ()
        for j in range(i + 1, count):
            if mask & (1 << j):
                continue
            rest_cost, rest_pairs = solve(mask | (1 << i) | (1 << j))
            cost: float = table.distance(nodes[i], nodes[j]) + rest_cost
            if cost < best_cost:
                best_cost = cost
                best_pairs = ((nodes[i], nodes[j]),) + rest_pairs
        return best_cost, best_pairs

    total_cost, pairs = solve(0)
    return Matching(pairs=list(pairs), total_cost=total_cost)
