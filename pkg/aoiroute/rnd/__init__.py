"""Seeded randomness helpers.

Every random choice in the package goes through numpy generators built here,
so identical seeds and parameters give identical graphs and routes.
"""
import numpy as np

from aoiroute import validation

SEED_BITS: int = 64


def validate_seed(seed: int) -> None:
    validation.validate(seed, int)
    if isinstance(seed, bool) or seed < 0 or seed >= 2 ** SEED_BITS:
        raise validation.ValidationError(
            f"seed {seed} should be a 64-bit unsigned integer"
        )


def make_rng(seed: int, *salt: int) -> np.random.Generator:
    """Creates numpy generator for given seed.

    Args:
        seed:
            64-bit unsigned seed.
        *salt:
            Extra non-negative integers mixed into the seed, e.g. graph index
            and trial number, to get independent streams.
    """
    validate_seed(seed)
    return np.random.default_rng(np.random.SeedSequence([seed, *salt]))


def derive_seed(seed: int, *salt: int) -> int:
    """Derives child 64-bit seed from given seed and salt."""
    validate_seed(seed)
    state = np.random.SeedSequence([seed, *salt]).generate_state(
        1, dtype=np.uint64
    )
    return int(state[0])
