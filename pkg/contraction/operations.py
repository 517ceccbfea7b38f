"""
Reversion and the left/right contractions of a metric algebra.

Both contractions are defined as adjoints of the exterior product under the
scalar product:

    (X _| Y) . W = Y . (~X ^ W)        (left)
    (X |_ Y) . W = X . (W ^ ~Y)        (right)

and are evaluated blade pair by blade pair on the reciprocal blade basis.
"""
from itertools import permutations
from math import factorial
from typing import Optional, Sequence

from exterior import wedge, wedge_all
from graded_core import BladeIndex, Multivector, grade_parts, iter_blades, reversion_sign
from metric import Algebra, check_dims, reciprocal_frame, scalar_product
from shared.errors import ShapeError
from shared.numeric import divide


def reversion(X: Multivector) -> Multivector:
    """~X: the grade-k part scaled by (-1)^(k(k-1)/2)."""
    return Multivector._trusted(X.dim, {b: reversion_sign(len(b)) * c for b, c in X.terms.items()})


def _unit(dim: int, blade: BladeIndex) -> Multivector:
    return Multivector._trusted(dim, {blade: 1})


def _left_blade(A: Algebra, left: BladeIndex, right: BladeIndex) -> dict:
    """e_I _| e_J as a term dict, memoized on the algebra."""
    key = (left, right)
    cached = A.left_cache.get(key)
    if cached is not None:
        return cached
    terms = {}
    p, q = len(left), len(right)
    if p <= q:
        reversed_left = reversion_sign(p) * _unit(A.dim, left)
        target = _unit(A.dim, right)
        for K in iter_blades(A.dim, q - p):
            value = scalar_product(A, target, wedge(reversed_left, A.reciprocal_blade(K)))
            if value:
                terms[K] = value
    A.left_cache[key] = terms
    return terms


def _right_blade(A: Algebra, left: BladeIndex, right: BladeIndex) -> dict:
    """e_I |_ e_J as a term dict, memoized on the algebra."""
    key = (left, right)
    cached = A.right_cache.get(key)
    if cached is not None:
        return cached
    terms = {}
    p, q = len(left), len(right)
    if p >= q:
        reversed_right = reversion_sign(q) * _unit(A.dim, right)
        source = _unit(A.dim, left)
        for K in iter_blades(A.dim, p - q):
            value = scalar_product(A, source, wedge(A.reciprocal_blade(K), reversed_right))
            if value:
                terms[K] = value
    A.right_cache[key] = terms
    return terms


def _bilinear(A: Algebra, X: Multivector, Y: Multivector, blade_rule) -> Multivector:
    check_dims(A, X, Y)
    acc: dict = {}
    for left, a in X.terms.items():
        for right, b in Y.terms.items():
            for blade, value in blade_rule(A, left, right).items():
                acc[blade] = acc.get(blade, 0) + a * b * value
    return Multivector._trusted(A.dim, acc)


def left_contract(A: Algebra, X: Multivector, Y: Multivector) -> Multivector:
    """
    Left contraction X _| Y.

    For homogeneous parts of grades p and q: zero if p > q, the scalar
    ~X . Y if p = q, otherwise the (q-p)-vector Z with Z . W = Y . (~X ^ W)
    for every (q-p)-vector W. Extended bilinearly over grade pairs.

    Raises:
        DimensionError: If dims differ
    """
    return _bilinear(A, X, Y, _left_blade)


def right_contract(A: Algebra, X: Multivector, Y: Multivector) -> Multivector:
    """
    Right contraction X |_ Y.

    Zero if p < q, otherwise the (p-q)-vector Z with Z . W = X . (W ^ ~Y).

    Raises:
        DimensionError: If dims differ
    """
    return _bilinear(A, X, Y, _right_blade)


# =============================================================================
# SUMMED FORMS
# =============================================================================

def _frames(A: Algebra, frame: Optional[Sequence[Multivector]]):
    if frame is None:
        return tuple(_unit(A.dim, (k,)) for k in range(1, A.dim + 1)), A.reciprocal
    if len(frame) != A.dim:
        raise ShapeError(f"Frame needs {A.dim} vectors, got {len(frame)}")
    return tuple(frame), reciprocal_frame(A, frame)


def left_contract_summed(A: Algebra, X: Multivector, Y: Multivector, frame=None) -> Multivector:
    """
    Left contraction from its summed definition

        X _| Y = 1/(q-p)! sum (~X ^ f^{i1} ^ ... ^ f^{ir}) . Y  f_{i1} ^ ... ^ f_{ir}

    over ordered index tuples, in an arbitrary frame f with reciprocal frame
    f^i (standard basis by default). Tuples with repeated indices vanish and
    are skipped.
    """
    check_dims(A, X, Y)
    vectors, duals = _frames(A, frame)
    result = Multivector._trusted(A.dim, {})
    for p, Xp in grade_parts(X).items():
        reversed_x = reversion(Xp)
        for q, Yq in grade_parts(Y).items():
            if p > q:
                continue
            r = q - p
            for indices in permutations(range(A.dim), r):
                coeff = scalar_product(A, wedge(reversed_x, wedge_all(*(duals[i] for i in indices), dim=A.dim)), Yq)
                if coeff:
                    result = result + divide(coeff, factorial(r)) * wedge_all(*(vectors[i] for i in indices), dim=A.dim)
    return result


def right_contract_summed(A: Algebra, X: Multivector, Y: Multivector, frame=None) -> Multivector:
    """
    Right contraction from its summed definition

        X |_ Y = 1/(p-q)! sum X . (f^{i1} ^ ... ^ f^{ir} ^ ~Y)  f_{i1} ^ ... ^ f_{ir}
    """
    check_dims(A, X, Y)
    vectors, duals = _frames(A, frame)
    result = Multivector._trusted(A.dim, {})
    for q, Yq in grade_parts(Y).items():
        reversed_y = reversion(Yq)
        for p, Xp in grade_parts(X).items():
            if p < q:
                continue
            r = p - q
            for indices in permutations(range(A.dim), r):
                coeff = scalar_product(A, Xp, wedge(wedge_all(*(duals[i] for i in indices), dim=A.dim), reversed_y))
                if coeff:
                    result = result + divide(coeff, factorial(r)) * wedge_all(*(vectors[i] for i in indices), dim=A.dim)
    return result
