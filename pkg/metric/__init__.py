from .algebra import Algebra
from .frames import change_basis, frame_vectors, from_frame, reciprocal_frame, to_frame
from .loader import load_metric_file, parse_metric_spec
from .models import MetricFile, MetricTensor
from .scalar import (
    ComponentTable,
    blade_gram_matrix,
    check_dims,
    contravariant_components,
    covariant_components,
    expand_vector,
    lower_components,
    make_algebra,
    require_grade,
    scalar_product,
    simple_scalar_product,
)

__all__ = [
    "Algebra",

    "change_basis",
    "frame_vectors",
    "from_frame",
    "reciprocal_frame",
    "to_frame",

    "load_metric_file",
    "parse_metric_spec",

    "MetricFile",
    "MetricTensor",

    "ComponentTable",
    "blade_gram_matrix",
    "check_dims",
    "contravariant_components",
    "covariant_components",
    "expand_vector",
    "lower_components",
    "make_algebra",
    "require_grade",
    "scalar_product",
    "simple_scalar_product",
]
