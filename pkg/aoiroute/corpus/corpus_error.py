from aoiroute.error.Error import Error


class UnknownInstanceError(Error):
    pass
