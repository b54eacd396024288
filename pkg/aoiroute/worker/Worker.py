from aoiroute.singleton.Singleton import Singleton


class Worker(Singleton):
    """Process-wide singleton, such as the boot of a command line run.

    Workers are discarded between tests, see the root conftest.
    """
