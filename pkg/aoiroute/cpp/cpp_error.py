from aoiroute.error.Error import Error


class TooManyOddNodesError(Error):
    def __init__(self, odd_count: int, cap: int) -> None:
        super().__init__(
            f"{odd_count} odd nodes exceed exact matching cap {cap}",
            exit_code=3
        )
