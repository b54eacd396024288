from aoiroute.error.Error import Error


class MalfunctionError(Error):
    """Something wrong with the object workflow.

    Rare error signifies broken internal invariants, e.g. a proven ratio
    bound that does not hold for a produced route.
    """
    def __init__(self, message: str = "") -> None:
        super().__init__(message, exit_code=1)
