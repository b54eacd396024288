class Error(Exception):
    """Base error class of the package.

    Attributes:
        message (optional):
            Message to be attached to the error.
        exit_code (optional):
            Process exit code to be retrieved by the command line interface.
            Validation-like failures use 2, exceeded budgets use 3.
    """
    def __init__(self, message: str = "", exit_code: int = 2) -> None:
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code

    def dict(self, *args, **kwargs) -> dict:
        return {
            "type": self.__class__.__name__,
            "message": self.message,
            "exit_code": self.exit_code
        }
