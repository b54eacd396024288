from aoiroute import validation
from aoiroute.aoi.Route import Route
from aoiroute.aoi.walk import classify_route
from aoiroute.euler.cycle import fleury, hierholzer
from aoiroute.euler.EdgeSelector import EdgeSelector
from aoiroute.euler.euler_error import NotEulerianError
from aoiroute.euler.RandomSelector import RandomSelector
from aoiroute.euler.TraversalState import Candidate, TraversalState
from aoiroute.graph.generate import generate_er
from aoiroute.graph.Graph import Graph
from aoiroute.graph.MultiGraph import MultiGraph


class LastSelector(EdgeSelector):
    def select(
        self,
        state: TraversalState,
        candidates: list[Candidate]
    ) -> Candidate:
        return candidates[-1]


class OutsideSelector(EdgeSelector):
    def select(
        self,
        state: TraversalState,
        candidates: list[Candidate]
    ) -> Candidate:
        return Candidate(99, 99, candidates[0].edge)


def test_hierholzer_doubled_path(std_doubled_path: MultiGraph):
    assert hierholzer(std_doubled_path, 0).nodes == (0, 1, 2, 1, 0)
    assert hierholzer(std_doubled_path, 1).nodes == (1, 0, 1, 2, 1)


def test_hierholzer_triangle(std_triangle):
    mg: MultiGraph = MultiGraph.from_duplicated(std_triangle.graph, set())

    assert hierholzer(mg, 0).nodes == (0, 1, 2, 0)


def test_fleury_visits_every_copy():
    for seed in range(10):
        g: Graph = generate_er(8, 0.4, 0.0, 10.0, seed)
        mg: MultiGraph = MultiGraph.from_duplicated(
            g, {e.id for e in g.edges}
        )
        route: Route = fleury(mg, 0, RandomSelector(seed))

        assert route.is_closed
        assert route.step_count == mg.copy_count
        assert classify_route(g, route).twice == mg.duplicated


def test_fleury_deterministic():
    g: Graph = generate_er(10, 0.3, 0.0, 10.0, 3)
    mg: MultiGraph = MultiGraph.from_duplicated(g, {e.id for e in g.edges})

    assert fleury(mg, 0, RandomSelector(5)) == fleury(mg, 0, RandomSelector(5))


def test_fleury_custom_selector(std_doubled_path: MultiGraph):
    assert fleury(std_doubled_path, 0, LastSelector()).nodes \
        == (0, 1, 2, 1, 0)


def test_fleury_selector_out_of_candidates(std_doubled_path: MultiGraph):
    validation.expect(
        fleury, ValueError, std_doubled_path, 0, OutsideSelector()
    )


def test_not_eulerian(std_path: Graph, std_doubled_path: MultiGraph):
    simple: MultiGraph = MultiGraph.from_duplicated(std_path, set())

    validation.expect(hierholzer, NotEulerianError, simple, 0)
    validation.expect(fleury, NotEulerianError, simple, 0, LastSelector())
    validation.expect(hierholzer, NotEulerianError, std_doubled_path, 5)


def test_base_selector_not_implemented(std_doubled_path: MultiGraph):
    state: TraversalState = TraversalState(std_doubled_path, 0)

    validation.expect(
        EdgeSelector().select,
        NotImplementedError,
        state,
        state.untraversed_incident(0)
    )
