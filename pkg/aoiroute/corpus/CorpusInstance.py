from aoiroute.aoi.Route import Route
from aoiroute.graph.Graph import Graph
from aoiroute.model.Model import Model


class CorpusInstance(Model):
    """Named graph with reference routes and their known average AoI.

    Attributes:
        name:
            Lookup name, e.g. "k4_hub".
        graph:
            The instance graph.
        routes:
            Reference routes by label.
        expected_aoi:
            Known average AoI by route label.
        expected_length:
            Known route length by route label, where published.
    """
    name: str
    graph: Graph
    routes: dict[str, Route]
    expected_aoi: dict[str, float]
    expected_length: dict[str, float] = {}
