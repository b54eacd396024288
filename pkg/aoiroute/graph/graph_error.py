from aoiroute.error.Error import Error


class GraphError(Error):
    """Graph cannot be built or used as requested."""


class DuplicateEdgeError(GraphError):
    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"more than one edge between nodes {u} and {v}")


class SelfLoopError(GraphError):
    def __init__(self, v: int) -> None:
        super().__init__(f"self-loop at node {v}")


class NonPositiveLengthError(GraphError):
    def __init__(self, u: int, v: int, length: float) -> None:
        super().__init__(
            f"edge ({u}, {v}) should have positive finite length,"
            f" got {length}"
        )


class NodeOutOfRangeError(GraphError):
    def __init__(self, node: int, node_count: int) -> None:
        super().__init__(
            f"node {node} is out of range 0..{node_count - 1}"
        )


class DisconnectedGraphError(GraphError):
    pass


class GenerationBudgetExceededError(GraphError):
    def __init__(self, message: str = "") -> None:
        super().__init__(message, exit_code=3)


class GraphFileError(GraphError):
    """Graph file cannot be read or has wrong structure."""
