"""Graph JSON files: {"nodes": N, "edges": [[u, v, length], ...]}."""
import json
from pathlib import Path

import pydantic

from aoiroute.graph.build_graph import build_graph
from aoiroute.graph.Graph import Graph
from aoiroute.graph.graph_error import GraphError, GraphFileError
from aoiroute.model.Model import Model


class GraphFile(Model):
    nodes: int
    edges: list[tuple[int, int, float]]

    class Config:
        extra = "forbid"


def parse_graph(text: str) -> Graph:
    """Parses graph from its JSON text.

    Raises:
        GraphFileError:
            Text is not valid JSON of the graph file structure.
        GraphError:
            Graph invariants are broken.
    """
    try:
        graph_file: GraphFile = GraphFile.parse_raw(text)
    except pydantic.ValidationError as err:
        raise GraphFileError(f"wrong graph file structure: {err}") from err
    return build_graph(
        graph_file.nodes, [tuple(spec) for spec in graph_file.edges]
    )


def read_graph(p: Path) -> Graph:
    try:
        text: str = Path(p).read_text()
    except OSError as err:
        raise GraphFileError(f"cannot read graph file {p}: {err}") from err
    try:
        return parse_graph(text)
    except GraphFileError:
        raise
    except GraphError as err:
        raise GraphFileError(f"{p}: {err.message}") from err


def format_graph(g: Graph) -> str:
    """Formats graph as JSON text.

    Lengths are written with 17 significant digits, so reading the text back
    gives bit-identical lengths.
    """
    return json.dumps({
        "nodes": g.node_count,
        "edges": [
            [e.u, e.v, float(format(e.length, ".17g"))] for e in g.edges
        ]
    })


def write_graph(g: Graph, p: Path) -> None:
    Path(p).write_text(format_graph(g) + "\n")
