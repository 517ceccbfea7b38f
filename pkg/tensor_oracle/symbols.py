"""
Permutation symbols and generalized Kronecker symbols.
"""
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from sympy.combinatorics import Permutation

from shared.errors import ShapeError
from shared.linalg import determinant


@lru_cache(maxsize=None)
def signed_permutations(k: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """All permutations of range(k) with their signs, identity first."""
    if k <= 1:
        return ((1, tuple(range(k))),)
    return tuple((Permutation(list(p)).signature(), p) for p in permutations(range(k)))


def perm_symbol(indices: Sequence[int]) -> int:
    """
    Permutation symbol epsilon^{i1...ik}.

    Returns:
        +1 if the indices are an even permutation of 1..k, -1 if odd, 0 otherwise
    """
    k = len(indices)
    if sorted(indices) != list(range(1, k + 1)):
        return 0
    if k <= 1:
        return 1
    return Permutation([i - 1 for i in indices]).signature()


def gen_kronecker(upper: Sequence[int], lower: Sequence[int]) -> int:
    """
    Generalized Kronecker symbol delta^{j1...jk}_{i1...ik}.

    The determinant of the k x k matrix [delta^{j_a}_{i_b}].

    Raises:
        ShapeError: If the index lists differ in length
    """
    if len(upper) != len(lower):
        raise ShapeError(f"Index lists differ in length: {len(upper)} vs {len(lower)}")
    matrix = [[1 if j == i else 0 for i in lower] for j in upper]
    return int(determinant(matrix))
