from enum import Enum

from aoiroute.cpp.augment import AugmentKind


class Algorithm(Enum):
    """Route planners compared by experiments.

    rand_* walk the augmented graph choosing uniformly among eligible
    neighbors, heu_* choose by the highest potential.
    """
    RAND_DUP = "rand_dup"
    HEU_DUP = "heu_dup"
    RAND_CPP = "rand_cpp"
    HEU_CPP = "heu_cpp"

    @property
    def augment_kind(self) -> AugmentKind:
        if self in (Algorithm.RAND_DUP, Algorithm.HEU_DUP):
            return AugmentKind.DUP
        return AugmentKind.CPP

    @property
    def is_random(self) -> bool:
        return self in (Algorithm.RAND_DUP, Algorithm.RAND_CPP)
