from aoiroute.model.Model import Model
from aoiroute.oracle.OptimalRoute import OptimalRoute


class RatioReport(Model):
    """Scheme routes compared against the exhaustive optimum.

    Attributes:
        optimal:
            Optimum among routes traversing every edge once or twice.
        lower_bound:
            ½·l(E)².
        aoi:
            AoI per scheme name (dup, cpp, heu_dup, heu_cpp).
        ratio_to_optimal:
            aoi / optimal.aoi per scheme.
        ratio_to_lower_bound:
            aoi / lower_bound per scheme.
        dup_ratio_bound:
            Proven bound of the dup ratio to the optimum.
        cpp_ratio_bound:
            Proven bound of the cpp ratio to the optimum.
    """
    optimal: OptimalRoute
    lower_bound: float
    aoi: dict[str, float]
    ratio_to_optimal: dict[str, float]
    ratio_to_lower_bound: dict[str, float]
    dup_ratio_bound: float
    cpp_ratio_bound: float

    class Config:
        allow_mutation = False
