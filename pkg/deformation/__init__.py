from .models import LinearOperator, MetricOperator
from .operator import (
    deformed_contractions,
    deformed_left_contract,
    deformed_right_contract,
    deformed_scalar_product,
    inverse_matrix,
    inverse_operator,
    is_adjoint_symmetric,
    make_metric_operator,
    operator_from_scalar_products,
    outermorphism,
)

__all__ = [
    "LinearOperator",
    "MetricOperator",

    "make_metric_operator",
    "inverse_operator",
    "inverse_matrix",
    "outermorphism",
    "deformed_scalar_product",
    "deformed_left_contract",
    "deformed_right_contract",
    "deformed_contractions",
    "operator_from_scalar_products",
    "is_adjoint_symmetric",
]
