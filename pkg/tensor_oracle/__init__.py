from .models import AntisymmetricTensor
from .oracle import (
    alternating_sum,
    antisymmetrize,
    blade_tensor,
    evaluate_on_covectors,
    from_blades,
    is_antisymmetric,
    kronecker_antisymmetrize,
    lower_indices,
    oracle_exterior,
    oracle_multivector_scalar_product,
    oracle_scalar_product,
    oracle_simple_kvector,
    oracle_wedge,
    to_blades,
)
from .symbols import gen_kronecker, perm_symbol, signed_permutations

__all__ = [
    "AntisymmetricTensor",

    "alternating_sum",
    "antisymmetrize",
    "blade_tensor",
    "evaluate_on_covectors",
    "from_blades",
    "is_antisymmetric",
    "kronecker_antisymmetrize",
    "lower_indices",
    "oracle_exterior",
    "oracle_multivector_scalar_product",
    "oracle_scalar_product",
    "oracle_simple_kvector",
    "oracle_wedge",
    "to_blades",

    "gen_kronecker",
    "perm_symbol",
    "signed_permutations",
]
