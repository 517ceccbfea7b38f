from .models import GradeIndexSet
from .multivector import (
    Multivector,
    add,
    basis_blade,
    basis_blades,
    from_terms,
    grade_part,
    grade_parts,
    linear_combination,
    negate,
    scalar,
    scale,
    subtract,
    vector,
    zero,
)
from .utils import (
    BladeIndex,
    SCALAR_BLADE,
    blade_count,
    blade_sort_key,
    canonical_sign,
    grade_blade_count,
    iter_blades,
    merge_sign,
    reversion_sign,
    validate_blade_index,
    validate_dim,
    validate_grade,
)

__all__ = [
    "GradeIndexSet",

    "Multivector",
    "add",
    "basis_blade",
    "basis_blades",
    "from_terms",
    "grade_part",
    "grade_parts",
    "linear_combination",
    "negate",
    "scalar",
    "scale",
    "subtract",
    "vector",
    "zero",

    "BladeIndex",
    "SCALAR_BLADE",
    "blade_count",
    "blade_sort_key",
    "canonical_sign",
    "grade_blade_count",
    "iter_blades",
    "merge_sign",
    "reversion_sign",
    "validate_blade_index",
    "validate_dim",
    "validate_grade",
]
