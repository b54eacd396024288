from aoiroute.error.Error import Error


class BudgetExceededError(Error):
    """Exhaustive search would exceed its configured budget."""
    def __init__(self, message: str = "") -> None:
        super().__init__(message, exit_code=3)
