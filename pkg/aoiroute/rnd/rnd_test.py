from aoiroute import validation
from aoiroute.rnd import derive_seed, make_rng


def test_derive_seed_deterministic():
    assert derive_seed(42, 1) == derive_seed(42, 1)
    assert derive_seed(42, 1) != derive_seed(42, 2)
    assert 0 <= derive_seed(42, 1) < 2 ** 64


def test_make_rng_deterministic():
    assert make_rng(5, 3).random() == make_rng(5, 3).random()


def test_negative_seed():
    validation.expect(make_rng, validation.ValidationError, -1)


def test_bool_seed():
    validation.expect(derive_seed, validation.ValidationError, True)
