"""
Sparse graded multivector storage and the linear-space operations on it.
"""
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from shared.errors import DimensionError
from shared.numeric import Real, coerce_real, is_negligible, normalize_exact
from .models import GradeIndexSet
from .utils import (
    BladeIndex,
    SCALAR_BLADE,
    blade_sort_key,
    canonical_sign,
    iter_blades,
    validate_blade_index,
    validate_dim,
    validate_grade,
)


class Multivector:
    """
    Element of the exterior algebra over an n-dimensional space.

    Stored as a map from canonical blade index (strictly increasing tuple of
    1-based basis indices) to a nonzero real coefficient. Values are immutable.

    Operators:
        X + Y, X - Y, -X  : linear-space operations
        a * X, X * a      : scalar multiplication (reals only)
        X ^ Y             : exterior product
    """

    __slots__ = ("_dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Optional[Mapping[Sequence[int], Real]] = None):
        self._dim = validate_dim(dim)
        cleaned: dict[BladeIndex, Real] = {}
        for blade, coeff in (terms or {}).items():
            blade = validate_blade_index(self._dim, blade)
            coeff = coerce_real(coeff)
            if not is_negligible(coeff):
                cleaned[blade] = coeff
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _trusted(cls, dim: int, terms: dict) -> "Multivector":
        """Build from already-canonical keys; still prunes negligible coefficients."""
        mv = object.__new__(cls)
        mv._dim = dim
        mv._terms = {b: normalize_exact(c) for b, c in terms.items() if not is_negligible(c)}
        mv._hash = None
        return mv

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def terms(self) -> Mapping[BladeIndex, Real]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[BladeIndex, Real]]:
        """Terms in canonical order: grade, then lexicographic blade."""
        for blade in sorted(self._terms, key=blade_sort_key):
            yield blade, self._terms[blade]

    def coefficient(self, blade: Sequence[int]) -> Real:
        return self._terms.get(tuple(blade), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def grades(self) -> GradeIndexSet:
        return GradeIndexSet(dim=self._dim, grades=sorted({len(b) for b in self._terms}))

    def is_homogeneous(self, k: Optional[int] = None) -> bool:
        found = {len(b) for b in self._terms}
        if k is None:
            return len(found) <= 1
        return found <= {k}

    def scalar_part(self) -> Real:
        return self._terms.get(SCALAR_BLADE, 0)

    def _check_same_dim(self, other: "Multivector") -> None:
        if not isinstance(other, Multivector):
            raise TypeError(f"Expected a Multivector, got {type(other).__name__}")
        if other._dim != self._dim:
            raise DimensionError(f"Dimension mismatch: {self._dim} vs {other._dim}")

    def __add__(self, other):
        if isinstance(other, Multivector):
            return add(self, other)
        return add(self, scalar(self._dim, other))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Multivector):
            return subtract(self, other)
        return subtract(self, scalar(self._dim, other))

    def __rsub__(self, other):
        return subtract(scalar(self._dim, other), self)

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return NotImplemented
        return scale(other, self)

    __rmul__ = __mul__

    def __xor__(self, other):
        from exterior import wedge

        if not isinstance(other, Multivector):
            return scale(other, self)
        return wedge(self, other)

    def __rxor__(self, other):
        return scale(other, self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._dim == other._dim and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._dim, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return f"Multivector(dim={self._dim}, 0)"
        parts = []
        for blade, coeff in self.items():
            name = "^".join(f"e{i}" for i in blade) or "1"
            parts.append(f"{coeff}*{name}")
        return f"Multivector(dim={self._dim}, {' + '.join(parts)})"


def zero(dim: int) -> Multivector:
    """
    The zero multivector.

    Raises:
        DimensionError: If dim is outside 1..max_dim
    """
    return Multivector(dim)


def scalar(dim: int, value: Real) -> Multivector:
    return Multivector(dim, {SCALAR_BLADE: value})


def vector(dim: int, coords: Sequence[Real]) -> Multivector:
    """Grade-1 multivector sum_i coords[i-1] e_i."""
    validate_dim(dim)
    if len(coords) != dim:
        raise DimensionError(f"Expected {dim} coordinates, got {len(coords)}")
    return Multivector(dim, {(i + 1,): c for i, c in enumerate(coords)})


def basis_blade(dim: int, indices: Sequence[int]) -> Multivector:
    """
    Basis blade e_{i1} ^ ... ^ e_{ik} from distinct indices in any order.

    Args:
        dim: Ambient dimension
        indices: Distinct 1-based basis indices

    Returns:
        +/- the canonical blade, signed by the parity of the sort

    Raises:
        DegenerateBladeError: If an index repeats
        DimensionError: If an index lies outside 1..dim
    """
    validate_dim(dim)
    for i in indices:
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= dim:
            raise DimensionError(f"Basis index {i!r} outside 1..{dim}")
    sign, blade = canonical_sign(indices)
    return Multivector._trusted(dim, {blade: sign})


def basis_blades(dim: int, grade: Optional[int] = None) -> list[Multivector]:
    validate_dim(dim)
    if grade is not None:
        validate_grade(dim, grade)
    return [Multivector._trusted(dim, {b: 1}) for b in iter_blades(dim, grade)]


def from_terms(dim: int, terms: Iterable[tuple[Sequence[int], Real]]) -> Multivector:
    """Accumulate (blade, coefficient) pairs; blades may repeat and be unsorted."""
    acc: dict[BladeIndex, Real] = {}
    for indices, coeff in terms:
        sign, blade = canonical_sign(indices)
        acc[blade] = acc.get(blade, 0) + sign * coerce_real(coeff)
    for blade in acc:
        validate_blade_index(dim, blade)
    return Multivector(dim, acc)


def grade_part(X: Multivector, k: int) -> Multivector:
    """
    The k-part <X>_k.

    Raises:
        GradeError: If k is outside 0..dim
    """
    validate_grade(X.dim, k)
    return Multivector._trusted(X.dim, {b: c for b, c in X.terms.items() if len(b) == k})


def grade_parts(X: Multivector) -> dict[int, Multivector]:
    """Nonzero k-parts of X keyed by grade."""
    parts: dict[int, dict] = {}
    for blade, coeff in X.terms.items():
        parts.setdefault(len(blade), {})[blade] = coeff
    return {k: Multivector._trusted(X.dim, t) for k, t in sorted(parts.items())}


def add(X: Multivector, Y: Multivector) -> Multivector:
    """
    Coefficientwise sum.

    Raises:
        DimensionError: If dims differ
    """
    X._check_same_dim(Y)
    acc = dict(X.terms)
    for blade, coeff in Y.terms.items():
        acc[blade] = acc.get(blade, 0) + coeff
    return Multivector._trusted(X.dim, acc)


def subtract(X: Multivector, Y: Multivector) -> Multivector:
    X._check_same_dim(Y)
    acc = dict(X.terms)
    for blade, coeff in Y.terms.items():
        acc[blade] = acc.get(blade, 0) - coeff
    return Multivector._trusted(X.dim, acc)


def negate(X: Multivector) -> Multivector:
    return Multivector._trusted(X.dim, {b: -c for b, c in X.terms.items()})


def scale(a: Real, X: Multivector) -> Multivector:
    """Multiply every coefficient by a; a = 0 gives the zero multivector."""
    a = coerce_real(a)
    if a == 0:
        return Multivector._trusted(X.dim, {})
    return Multivector._trusted(X.dim, {b: a * c for b, c in X.terms.items()})


def linear_combination(dim: int, pairs: Iterable[tuple[Real, Multivector]]) -> Multivector:
    """sum_i a_i X_i with a single prune at the end."""
    acc: dict[BladeIndex, Real] = {}
    for a, X in pairs:
        if X.dim != dim:
            raise DimensionError(f"Dimension mismatch: {dim} vs {X.dim}")
        for blade, coeff in X.terms.items():
            acc[blade] = acc.get(blade, 0) + a * coeff
    return Multivector._trusted(dim, acc)
