from typing import Any

from aoiroute.error.Error import Error


class ValidationError(Error):
    """Object breaks the expected type or value restrictions.

    Without explicit message one is built from failed_obj and expected_type.
    """
    def __init__(
        self,
        message: str = "",
        failed_obj: Any | None = None,
        expected_type: type | list[type] | None = None,
    ) -> None:
        # failed_obj None is still reported, since None is compared to types
        # as well
        if not message and failed_obj is not None:
            message = (
                f"{failed_obj!r} should have type"
                f" {format_type_names(expected_type)}"
            )

        super().__init__(message)


class ReValidationError(ValidationError):
    """Text does not match the expected pattern."""
    def __init__(
        self,
        message: str = "",
        failed_obj: Any | None = None,
        pattern: str | None = None
    ) -> None:
        if not message and failed_obj is not None and pattern is not None:
            message = f"{failed_obj!r} should match pattern {pattern}"

        super().__init__(message)


class UnknownValidatorError(Error):
    pass


class ExpectationError(Error):
    """Expected error has not been raised."""


def format_type_names(expected_type: type | list[type] | None) -> str:
    if isinstance(expected_type, type):
        return expected_type.__name__
    if type(expected_type) is list:
        return "one of " + ", ".join(t.__name__ for t in expected_type)
    raise TypeError(f"unrecognized expected type {expected_type}")
