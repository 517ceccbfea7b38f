"""
Metric specifications accepted by the gacalc --metric option.
"""
import logging
from fractions import Fraction
from pathlib import Path

from pydantic import ValidationError

from shared.errors import DimensionError, InvalidMetricError
from shared.numeric import normalize_exact
from .models import MetricFile, MetricTensor

logger = logging.getLogger(__name__)


def load_metric_file(path: str | Path) -> MetricTensor:
    """
    Read a {"dim": n, "matrix": [[...]]} JSON file.

    Raises:
        InvalidMetricError: If the file is unreadable or not a valid metric file
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidMetricError(f"Cannot read metric file {path}: {e}") from e
    try:
        payload = MetricFile.model_validate_json(text)
    except ValidationError as e:
        raise InvalidMetricError(f"Invalid metric file {path}: {e.error_count()} validation error(s)") from e
    logger.debug("Loaded %dx%d metric from %s", payload.dim, payload.dim, path)
    return payload.to_metric()


def _parse_entry(token: str):
    token = token.strip()
    try:
        return normalize_exact(Fraction(token))
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidMetricError(f"Invalid diagonal entry {token!r}") from e


def parse_metric_spec(spec: str, dim: int) -> MetricTensor:
    """
    Parse a metric specification.

    Args:
        spec: "euclidean", "diag:a,b,..." (exact decimals) or "file:PATH"
        dim: Dimension the metric must have

    Raises:
        DimensionError: If the metric's dimension differs from dim
        InvalidMetricError: If the specification is malformed
    """
    spec = spec.strip()
    if spec == "euclidean":
        return MetricTensor.euclidean(dim)
    if spec.startswith("diag:"):
        entries = [_parse_entry(t) for t in spec[len("diag:"):].split(",")]
        if len(entries) != dim:
            raise DimensionError(f"diag metric has {len(entries)} entries, expected {dim}")
        return MetricTensor.diagonal(entries)
    if spec.startswith("file:"):
        metric = load_metric_file(spec[len("file:"):])
        if metric.dim != dim:
            raise DimensionError(f"Metric file has dimension {metric.dim}, expected {dim}")
        return metric
    raise InvalidMetricError(f"Unknown metric specification {spec!r} (use euclidean, diag:a,b,... or file:PATH)")
