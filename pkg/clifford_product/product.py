"""
Geometric (Clifford) product for arbitrary symmetric metrics.

A vector times a multivector splits into contraction plus wedge:

    v X = v _| X + v ^ X        X v = X |_ v + X ^ v

Higher blades are peeled one vector at a time. With e_I = e_i1 ^ e_R and
e_i1 ^ e_R = e_i1 e_R - e_i1 _| e_R,

    e_I Y = e_i1 (e_R Y) - (e_i1 _| e_R) Y

which needs no orthogonality of the basis.
"""
import logging

from contraction import left_contract, right_contract
from exterior import wedge
from graded_core import BladeIndex, Multivector, iter_blades
from metric import Algebra, check_dims, require_grade

logger = logging.getLogger(__name__)


def _unit(dim: int, blade: BladeIndex) -> Multivector:
    return Multivector._trusted(dim, {blade: 1})


def vector_product(A: Algebra, v: Multivector, X: Multivector) -> Multivector:
    """
    v X = v _| X + v ^ X.

    Raises:
        GradeError: If v is not a vector
    """
    check_dims(A, v, X)
    require_grade(v, 1)
    return left_contract(A, v, X) + wedge(v, X)


def product_vector(A: Algebra, X: Multivector, v: Multivector) -> Multivector:
    """X v = X |_ v + X ^ v."""
    check_dims(A, X, v)
    require_grade(v, 1)
    return right_contract(A, X, v) + wedge(X, v)


def _blade_product(A: Algebra, left: BladeIndex, right: BladeIndex) -> Multivector:
    """e_I e_J, from the Cayley table when built, else by peeling (memoized)."""
    table = A.cayley
    if table is not None:
        return table[(left, right)]
    key = (left, right)
    cached = A.product_cache.get(key)
    if cached is not None:
        return cached
    dim = A.dim
    target = _unit(dim, right)
    if not left:
        result = target
    elif len(left) == 1:
        result = vector_product(A, _unit(dim, left), target)
    else:
        first = _unit(dim, left[:1])
        rest_product = _blade_product(A, left[1:], right)
        result = vector_product(A, first, rest_product)
        # (e_i1 _| e_R) has grade |R| - 1, so this recursion terminates
        correction = left_contract(A, first, _unit(dim, left[1:]))
        for blade, coeff in correction.terms.items():
            result = result - coeff * _blade_product(A, blade, right)
    A.product_cache[key] = result
    return result


def geometric_product(A: Algebra, X: Multivector, Y: Multivector) -> Multivector:
    """
    Geometric product XY, bilinear over the blade terms of X and Y.

    Raises:
        DimensionError: If dims differ
    """
    check_dims(A, X, Y)
    acc: dict = {}
    for left, a in X.terms.items():
        for right, b in Y.terms.items():
            for blade, value in _blade_product(A, left, right).terms.items():
                acc[blade] = acc.get(blade, 0) + a * b * value
    return Multivector._trusted(A.dim, acc)


def cayley_table(A: Algebra) -> dict[tuple[BladeIndex, BladeIndex], Multivector]:
    """
    Products e_I e_J of every canonical blade pair.

    Built once and stored on the algebra, after which geometric_product reads
    from it.
    """
    table = A.cayley
    if table is None:
        blades = list(iter_blades(A.dim))
        table = {(I, J): _blade_product(A, I, J) for I in blades for J in blades}
        A.cayley = table
        logger.debug("Built %d-entry Cayley table for dim-%d algebra", len(table), A.dim)
    return table
