import numpy as np

from aoiroute import validation
from aoiroute.bench.AlgorithmSummary import AlgorithmSummary
from aoiroute.bench.ResultRow import ResultRow


def summarize(rows: list[ResultRow]) -> list[AlgorithmSummary]:
    """Aggregates ratios per algorithm, in order of first appearance.

    The 95th percentile is linearly interpolated.

    Raises:
        ValidationError:
            No rows given.
    """
    validation.validate_each(rows, ResultRow, expected_sequence_type=list)
    if not rows:
        raise validation.ValidationError("nothing to summarize")

    ratios_by_algorithm: dict[str, list[float]] = {}
    for row in rows:
        ratios_by_algorithm.setdefault(row.algorithm, []).append(row.ratio)

    summaries: list[AlgorithmSummary] = []
    for algorithm, ratios in ratios_by_algorithm.items():
        values: np.ndarray = np.array(ratios, dtype=float)
        summaries.append(AlgorithmSummary(
            algorithm=algorithm,
            count=len(ratios),
            mean=float(np.mean(values)),
            median=float(np.median(values)),
            p95=float(np.percentile(values, 95))
        ))
    return summaries
