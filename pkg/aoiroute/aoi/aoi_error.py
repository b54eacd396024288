from aoiroute.error.Error import Error


class RouteError(Error):
    """Route cannot be evaluated on the given graph."""


class NotClosedWalkError(RouteError):
    pass


class NotAWalkError(RouteError):
    """Consecutive route nodes are not adjacent."""


class NotInF1Error(RouteError):
    """Some edge is traversed zero times or more than twice."""


class NegativeGapError(RouteError):
    pass


class StepTooCoarseError(RouteError):
    pass


class RouteParsingError(RouteError):
    pass
