from aoiroute import validation
from aoiroute.singleton.Singleton import Singleton


class _Counter(Singleton):
    def __init__(self, start: int) -> None:
        self.value: int = start


def test_same_instance():
    first: _Counter = _Counter(1)
    second: _Counter = _Counter(5)

    assert first is second
    assert _Counter.ie().value == 1
    _Counter.discard()


def test_discard():
    _Counter(3)
    assert _Counter.is_initialized

    _Counter.discard()

    assert not _Counter.is_initialized
    assert _Counter(7).value == 7
    _Counter.discard()


def test_discard_uninitialized():
    validation.expect(_Counter.discard, ValueError)
    _Counter.discard(should_validate=False)
