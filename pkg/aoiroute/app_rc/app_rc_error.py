from aoiroute.error.Error import Error


class AppRCSearchError(Error):
    """Explicitly requested app rc file cannot be found."""


class EmptyAppRCError(Error):
    """Explicitly requested app rc file has no sections."""


class UnsupportedAppRCKeyError(Error):
    """Top-level key of app rc is not a boot mode."""
