"""
Dense-tensor reference implementation of the exterior algebra.

Everything here works on full (n,)*k arrays and loops over permutations, so it
is only usable for small n. Fast paths elsewhere are tested against it.
"""
import logging
from fractions import Fraction
from itertools import combinations, product
from math import factorial
from typing import Sequence

import numpy as np

from graded_core import Multivector, grade_parts, validate_grade, zero
from shared.errors import (
    DimensionError,
    GradeError,
    InvariantViolationError,
    RankError,
    ShapeError,
)
from config import get_tolerance
from shared.numeric import Real, coerce_real, divide
from .models import AntisymmetricTensor
from .symbols import gen_kronecker, signed_permutations

logger = logging.getLogger(__name__)


# =============================================================================
# ARRAY HELPERS
# =============================================================================

def _dtype_for(values) -> object:
    values = list(values)
    if all(isinstance(v, (int, np.integer)) and not isinstance(v, bool) for v in values):
        return np.int64
    if any(isinstance(v, (float, np.floating)) for v in values):
        return np.float64
    return object


def _as_array(data) -> np.ndarray:
    """Copy into an int64, float64 or Fraction-object array."""
    if isinstance(data, AntisymmetricTensor):
        data = data.entries
    arr = np.asarray(data)
    if arr.dtype.kind in "iub":
        return arr.astype(np.int64)
    if arr.dtype.kind == "f":
        return arr.astype(np.float64)
    flat = [coerce_real(v) for v in arr.ravel()]
    dtype = _dtype_for(flat)
    if dtype is object:
        out = np.empty(len(flat), dtype=object)
        out[:] = flat
        return out.reshape(arr.shape)
    return np.array(flat, dtype=dtype).reshape(arr.shape)


def _exact_divide(arr: np.ndarray, divisor: int) -> np.ndarray:
    """Divide every entry by divisor, staying integral where possible."""
    if divisor == 1:
        return arr.copy()
    if arr.dtype == np.int64:
        if np.all(arr % divisor == 0):
            return arr // divisor
        out = np.empty(arr.shape, dtype=object)
        for idx in np.ndindex(arr.shape):
            out[idx] = Fraction(int(arr[idx]), divisor)
        return out
    if arr.dtype == np.float64:
        return arr / divisor
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = divide(coerce_real(arr[idx]), divisor)
    return out


def _shape_info(arr: np.ndarray, dim: int | None) -> tuple[int, int]:
    rank = arr.ndim
    if rank == 0:
        if dim is None:
            raise ShapeError("A rank-0 tensor needs an explicit dim")
        return dim, 0
    n = arr.shape[0]
    if any(s != n for s in arr.shape):
        raise ShapeError(f"Tensor axes differ in length: {arr.shape}")
    if dim is not None and dim != n:
        raise DimensionError(f"Dimension mismatch: {dim} vs {n}")
    return n, rank


def _make_tensor(dim: int, rank: int, entries: np.ndarray, strict: bool) -> AntisymmetricTensor:
    overflow = rank > dim
    if overflow:
        if strict:
            raise RankError(f"Rank {rank} exceeds dimension {dim}")
        logger.warning("Rank %d exceeds dimension %d; tensor is identically zero", rank, dim)
    return AntisymmetricTensor(dim=dim, rank=rank, entries=entries, overflow=overflow)


# =============================================================================
# ANTISYMMETRIZATION
# =============================================================================

def alternating_sum(t) -> np.ndarray:
    """sum over sigma in S_k of sign(sigma) * (t with axes permuted by sigma), undivided."""
    arr = _as_array(t)
    if arr.ndim <= 1:
        return arr.copy()
    total = None
    for sign, perm in signed_permutations(arr.ndim):
        term = np.transpose(arr, perm)
        term = term if sign > 0 else -term
        total = term.copy() if total is None else total + term
    return total


def antisymmetrize(t, dim: int | None = None, strict: bool = False) -> AntisymmetricTensor:
    """
    Antisymmetric part A(t) = (1/k!) sum_sigma sign(sigma) sigma(t).

    Args:
        t: Array-like of shape (n,)*k, or an AntisymmetricTensor
        dim: Required only for rank-0 input
        strict: Raise RankError instead of flagging overflow when k > n

    Returns:
        AntisymmetricTensor; ranks 0 and 1 pass through unchanged

    Raises:
        DimensionError: If n exceeds the oracle cap
        RankError: If strict and k > n
    """
    arr = _as_array(t)
    n, k = _shape_info(arr, dim)
    entries = _exact_divide(alternating_sum(arr), factorial(k))
    return _make_tensor(n, k, entries, strict)


def is_antisymmetric(t) -> bool:
    """Whether the alternating sum of t equals k! t (to the antisymmetry tolerance for floats)."""
    arr = _as_array(t)
    if arr.ndim <= 1:
        return True
    summed = alternating_sum(arr)
    expected = factorial(arr.ndim) * arr
    if summed.dtype == np.float64 or expected.dtype == np.float64:
        diff = np.abs(summed.astype(np.float64) - expected.astype(np.float64)) / factorial(arr.ndim)
        return bool(np.all(diff <= get_tolerance("antisymmetry")))
    return bool(np.all(summed == expected))


def kronecker_antisymmetrize(t, dim: int | None = None) -> AntisymmetricTensor:
    """
    Antisymmetrize through the generalized Kronecker symbol:
    result^{j1...jk} = (1/k!) delta^{j1...jk}_{i1...ik} t^{i1...ik}.
    """
    arr = _as_array(t)
    n, k = _shape_info(arr, dim)
    if k == 0:
        return _make_tensor(n, 0, arr.copy(), strict=False)
    out = np.empty(arr.shape, dtype=object)
    for upper in product(range(1, n + 1), repeat=k):
        total = 0
        for lower in product(range(1, n + 1), repeat=k):
            delta = gen_kronecker(upper, lower)
            if delta:
                total += delta * coerce_real(arr[tuple(i - 1 for i in lower)])
        out[tuple(j - 1 for j in upper)] = divide(total, factorial(k))
    return _make_tensor(n, k, _as_array(out), strict=False)


# =============================================================================
# EXTERIOR PRODUCT
# =============================================================================

def oracle_exterior(X: AntisymmetricTensor, Y: AntisymmetricTensor) -> AntisymmetricTensor:
    """
    Exterior product of antisymmetric tensors: ((p+q)!/(p!q!)) A(X (x) Y).

    Raises:
        DimensionError: If dims differ
    """
    if X.dim != Y.dim:
        raise DimensionError(f"Dimension mismatch: {X.dim} vs {Y.dim}")
    outer = np.multiply.outer(_as_array(X), _as_array(Y))
    rank = X.rank + Y.rank
    entries = _exact_divide(alternating_sum(outer), factorial(X.rank) * factorial(Y.rank))
    return _make_tensor(X.dim, rank, entries, strict=False)


def oracle_simple_kvector(vectors: Sequence[Sequence[Real]]) -> AntisymmetricTensor:
    """
    Simple k-vector v_1 ^ ... ^ v_k as sum_sigma sign(sigma) v_sigma(1) (x) ... (x) v_sigma(k).

    Args:
        vectors: k coordinate lists of equal length n
    """
    if not vectors:
        raise ShapeError("oracle_simple_kvector needs at least one vector")
    arrays = [_as_array(v) for v in vectors]
    n = arrays[0].shape[0]
    if any(a.shape != (n,) for a in arrays):
        raise DimensionError("All vectors must have the same length")
    outer = arrays[0]
    for arr in arrays[1:]:
        outer = np.multiply.outer(outer, arr)
    return _make_tensor(n, len(arrays), alternating_sum(outer), strict=False)


# =============================================================================
# MULTIVECTOR BRIDGE
# =============================================================================

def from_blades(X: Multivector, k: int) -> AntisymmetricTensor:
    """
    Dense rank-k tensor of the grade-k multivector X.

    entries[sigma(I)] = sign(sigma) * coefficient of e_I, zero on repeated indices.

    Raises:
        GradeError: If X has terms outside grade k
    """
    validate_grade(X.dim, k)
    if not X.is_homogeneous(k):
        raise GradeError(f"from_blades() needs a pure grade-{k} multivector")
    shape = (X.dim,) * k
    dtype = _dtype_for(X.terms.values())
    entries = np.zeros(shape, dtype=dtype)
    for blade, coeff in X.terms.items():
        for sign, perm in signed_permutations(k):
            entries[tuple(blade[p] - 1 for p in perm)] = sign * coeff
    return _make_tensor(X.dim, k, entries, strict=False)


def to_blades(T: AntisymmetricTensor, check: bool = True) -> Multivector:
    """
    Grade-k multivector of an antisymmetric tensor: the coefficient of e_I is
    the entry at the increasing index tuple I.

    Raises:
        InvariantViolationError: If check is set and T is not antisymmetric
    """
    if check and not is_antisymmetric(T):
        raise InvariantViolationError("to_blades() input is not antisymmetric")
    if T.rank > T.dim:
        return zero(T.dim)
    terms = {}
    for blade in combinations(range(1, T.dim + 1), T.rank):
        value = coerce_real(T.entries[tuple(i - 1 for i in blade)])
        if value != 0:
            terms[blade] = value
    return Multivector(T.dim, terms)


def blade_tensor(dim: int, indices: Sequence[int]) -> AntisymmetricTensor:
    """Tensor of the canonical blade e_I with entries delta^{j1...jk}_{i1...ik}."""
    k = len(indices)
    entries = np.zeros((dim,) * k, dtype=np.int64)
    for upper in product(range(1, dim + 1), repeat=k):
        entries[tuple(j - 1 for j in upper)] = gen_kronecker(upper, indices)
    return _make_tensor(dim, k, entries, strict=False)


def oracle_wedge(X: Multivector, Y: Multivector) -> Multivector:
    """Exterior product of multivectors computed grade pair by grade pair in tensor form."""
    if X.dim != Y.dim:
        raise DimensionError(f"Dimension mismatch: {X.dim} vs {Y.dim}")
    result = zero(X.dim)
    for p, Xp in grade_parts(X).items():
        for q, Yq in grade_parts(Y).items():
            if p + q > X.dim:
                continue
            T = oracle_exterior(from_blades(Xp, p), from_blades(Yq, q))
            result = result + to_blades(T, check=False)
    return result


# =============================================================================
# METRIC EVALUATION
# =============================================================================

def evaluate_on_covectors(T: AntisymmetricTensor, covectors: Sequence[Sequence[Real]]) -> Real:
    """
    T(omega_1, ..., omega_k) = T^{i1...ik} omega_1[i1] ... omega_k[ik].

    Args:
        covectors: k coordinate lists against the dual basis
    """
    if len(covectors) != T.rank:
        raise ShapeError(f"Expected {T.rank} covectors, got {len(covectors)}")
    result = _as_array(T)
    for omega in covectors:
        arr = _as_array(omega)
        if arr.shape != (T.dim,):
            raise DimensionError(f"Covector must have {T.dim} components")
        result = np.tensordot(arr, result, axes=([0], [0]))
    return coerce_real(np.asarray(result)[()])


def lower_indices(G: Sequence[Sequence[Real]], T: AntisymmetricTensor) -> AntisymmetricTensor:
    """Covariant components X_{j1...jk} = G_{j1 i1} ... G_{jk ik} X^{i1...ik}."""
    metric = _as_array(G)
    if metric.shape != (T.dim, T.dim):
        raise ShapeError(f"Expected a {T.dim}x{T.dim} metric, got {metric.shape}")
    arr = _as_array(T)
    for axis in range(T.rank):
        arr = np.moveaxis(np.tensordot(metric, arr, axes=([1], [axis])), 0, axis)
    return AntisymmetricTensor(dim=T.dim, rank=T.rank, entries=_as_array(arr), overflow=T.overflow)


def oracle_scalar_product(G: Sequence[Sequence[Real]], X: AntisymmetricTensor, Y: AntisymmetricTensor) -> Real:
    """
    Component form (1/p!) X_{i1...ip} Y^{i1...ip}.

    Zero across different ranks; rank 0 is the product of the two reals.
    """
    if X.dim != Y.dim:
        raise DimensionError(f"Dimension mismatch: {X.dim} vs {Y.dim}")
    if X.rank != Y.rank:
        return 0
    if X.rank == 0:
        return coerce_real(X.entries[()]) * coerce_real(Y.entries[()])
    lowered = lower_indices(G, X)
    total = np.sum(_as_array(lowered) * _as_array(Y))
    return divide(coerce_real(total), factorial(X.rank))


def oracle_multivector_scalar_product(G: Sequence[Sequence[Real]], X: Multivector, Y: Multivector) -> Real:
    """sum_k <X>_k . <Y>_k through the component formula."""
    if X.dim != Y.dim:
        raise DimensionError(f"Dimension mismatch: {X.dim} vs {Y.dim}")
    y_parts = grade_parts(Y)
    total = 0
    for k, Xk in grade_parts(X).items():
        if k in y_parts:
            total += oracle_scalar_product(G, from_blades(Xk, k), from_blades(y_parts[k], k))
    return coerce_real(total)
