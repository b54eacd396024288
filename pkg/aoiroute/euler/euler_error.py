from aoiroute.error.Error import Error


class NotEulerianError(Error):
    """Multigraph is disconnected or has odd-degree nodes."""


class StrandedError(Error):
    """Walk reached a node without untraversed edges while some remain."""
