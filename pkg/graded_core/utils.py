"""
Blade index helpers: validation, canonical ordering and permutation signs.
"""
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional, Sequence

from config import get_limit
from shared.errors import DegenerateBladeError, DimensionError, GradeError

BladeIndex = tuple[int, ...]
SCALAR_BLADE: BladeIndex = ()


def validate_dim(dim: int, minimum: int = 1) -> int:
    """
    Check an ambient dimension against the configured cap.

    Raises:
        DimensionError: If dim is not an integer in minimum..max_dim
    """
    max_dim = get_limit("max_dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or not minimum <= dim <= max_dim:
        raise DimensionError(f"Dimension must be an integer in {minimum}..{max_dim}, got {dim!r}")
    return dim


def validate_grade(dim: int, k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k <= dim:
        raise GradeError(f"Grade must be an integer in 0..{dim}, got {k!r}")
    return k


def validate_blade_index(dim: int, blade: Sequence[int]) -> BladeIndex:
    """
    Check that a key is a canonical blade index for dim.

    Raises:
        DimensionError: If an index lies outside 1..dim
        DegenerateBladeError: If indices are not strictly increasing
    """
    blade = tuple(blade)
    for i in blade:
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= dim:
            raise DimensionError(f"Basis index {i!r} outside 1..{dim}")
    if any(a >= b for a, b in zip(blade, blade[1:])):
        raise DegenerateBladeError(f"Blade index {blade} is not strictly increasing")
    return blade


def canonical_sign(indices: Sequence[int]) -> tuple[int, BladeIndex]:
    """
    Sort a list of distinct indices, tracking the parity of the sort.

    Args:
        indices: Distinct basis indices in any order

    Returns:
        (sign, sorted indices) with sign = +1 for even, -1 for odd sorts

    Raises:
        DegenerateBladeError: If an index repeats
    """
    indices = list(indices)
    if len(set(indices)) != len(indices):
        raise DegenerateBladeError(f"Repeated index in blade {tuple(indices)}")
    inversions = sum(
        1
        for a in range(len(indices))
        for b in range(a + 1, len(indices))
        if indices[a] > indices[b]
    )
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


def merge_sign(left: BladeIndex, right: BladeIndex) -> tuple[int, Optional[BladeIndex]]:
    """
    Sign and blade of e_left ^ e_right for two canonical blades.

    Counts inversions while merging the two sorted lists: every element of
    right that is smaller than a remaining element of left passes over it.

    Returns:
        (0, None) when the blades share an index, else (sign, merged blade)
    """
    merged = []
    inversions = 0
    i = j = 0
    while i < len(left) and j < len(right):
        a, b = left[i], right[j]
        if a == b:
            return 0, None
        if a < b:
            merged.append(a)
            i += 1
        else:
            merged.append(b)
            inversions += len(left) - i
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return (-1 if inversions % 2 else 1), tuple(merged)


def reversion_sign(grade: int) -> int:
    """(-1)^(k(k-1)/2)"""
    return -1 if (grade * (grade - 1) // 2) % 2 else 1


def blade_sort_key(blade: BladeIndex) -> tuple[int, BladeIndex]:
    return len(blade), blade


def iter_blades(dim: int, grade: Optional[int] = None) -> Iterator[BladeIndex]:
    """Canonical blades of dim in grade-then-lexicographic order."""
    grades: Iterable[int] = range(dim + 1) if grade is None else (grade,)
    for k in grades:
        yield from combinations(range(1, dim + 1), k)


def blade_count(dim: int) -> int:
    """
    Number of canonical blades, 2^dim.

    Raises:
        DimensionError: If dim is outside 0..max_dim
    """
    validate_dim(dim, minimum=0)
    return 2 ** dim


def grade_blade_count(dim: int, k: int) -> int:
    """Number of grade-k blades, binomial(dim, k)."""
    validate_dim(dim, minimum=0)
    validate_grade(dim, k)
    return comb(dim, k)
