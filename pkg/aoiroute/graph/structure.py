"""Structural queries over graphs and multigraphs."""
import networkx as nx

from aoiroute.graph.Graph import Graph
from aoiroute.graph.MultiGraph import MultiGraph


def is_connected(g: Graph | MultiGraph) -> bool:
    """Checks whether every node is reachable from node 0.

    A node without edges makes the graph disconnected, including the
    single-node graph.
    """
    base: Graph = g.base if isinstance(g, MultiGraph) else g
    if any(base.degree(v) == 0 for v in range(base.node_count)):
        return False
    return nx.is_connected(base.to_networkx())


def is_eulerian(g: Graph | MultiGraph) -> bool:
    """Checks whether g is connected and every degree is even."""
    return is_connected(g) and not g.odd_nodes()


def total_length(g: Graph | MultiGraph) -> float:
    """Sum of edge lengths, parallel copies counted separately."""
    return g.total_length
