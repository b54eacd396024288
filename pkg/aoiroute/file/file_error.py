from aoiroute.error.Error import Error


class NotDirError(Error):
    pass


class NotValidYmlError(Error):
    """Loaded yml is not a map-like structure."""


class NotValidFileSuffixError(Error):
    pass
