"""
Tests for the dense-tensor reference implementation.
"""
from fractions import Fraction
from itertools import permutations, product
from math import factorial

import numpy as np
import pytest

from graded_core import Multivector, basis_blade, grade_part
from shared.errors import DimensionError, GradeError, InvariantViolationError, RankError, ShapeError
from shared.testing import random_homogeneous
from tensor_oracle import (
    AntisymmetricTensor,
    alternating_sum,
    antisymmetrize,
    blade_tensor,
    evaluate_on_covectors,
    from_blades,
    gen_kronecker,
    is_antisymmetric,
    kronecker_antisymmetrize,
    lower_indices,
    oracle_exterior,
    oracle_scalar_product,
    oracle_simple_kvector,
    oracle_wedge,
    perm_symbol,
    to_blades,
)


def permutation_determinant(rows):
    """Leibniz-formula determinant, independent of the code under test."""
    size = len(rows)
    total = 0
    for perm in permutations(range(size)):
        inversions = sum(1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b])
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total


# =============================================================================
# SYMBOLS
# =============================================================================

def test_perm_symbol():
    assert perm_symbol([1, 2, 3]) == 1
    assert perm_symbol([2, 1, 3]) == -1
    assert perm_symbol([2, 3, 1]) == 1
    assert perm_symbol([1, 1, 3]) == 0
    assert perm_symbol([1, 2, 4]) == 0
    assert perm_symbol([1]) == 1
    assert perm_symbol([]) == 1


def test_gen_kronecker_values():
    assert gen_kronecker([1, 2], [1, 2]) == 1
    assert gen_kronecker([1, 2], [2, 1]) == -1
    assert gen_kronecker([1, 1], [1, 1]) == 0
    assert gen_kronecker([1, 2], [1, 3]) == 0
    assert gen_kronecker([], []) == 1
    with pytest.raises(ShapeError):
        gen_kronecker([1, 2], [1])


def test_gen_kronecker_is_product_of_permutation_symbols():
    """delta^{j...}_{i...} = eps^{j...} eps_{i...} on permutations of 1..k"""
    for k in range(1, 5):
        for upper in permutations(range(1, k + 1)):
            for lower in permutations(range(1, k + 1)):
                assert gen_kronecker(upper, lower) == perm_symbol(upper) * perm_symbol(lower)


def test_gen_kronecker_matches_leibniz_determinant():
    for upper in product(range(1, 4), repeat=3):
        lower = (1, 2, 3)
        matrix = [[1 if j == i else 0 for i in lower] for j in upper]
        assert gen_kronecker(upper, lower) == permutation_determinant(matrix)


# =============================================================================
# ANTISYMMETRIZATION
# =============================================================================

def _random_tensor(rng, n, k):
    return rng.integers(-5, 6, size=(n,) * k)


def test_low_ranks_pass_through():
    t = np.array([1, 2, 3])
    assert np.array_equal(antisymmetrize(t).entries, t)
    scalar_tensor = antisymmetrize(np.array(5), dim=3)
    assert scalar_tensor.rank == 0 and scalar_tensor.entries[()] == 5


def test_antisymmetrize_repeated_vector_vanishes():
    for n in (2, 3, 4):
        t = np.zeros((n, n), dtype=np.int64)
        t[0, 0] = 1
        assert antisymmetrize(t).is_zero()


def test_antisymmetrize_basic_bivector():
    e1 = np.array([1, 0])
    e2 = np.array([0, 1])
    A = antisymmetrize(np.multiply.outer(e1, e2))
    assert A.entries[0, 1] == Fraction(1, 2)
    assert A.entries[1, 0] == Fraction(-1, 2)
    assert A.entries[0, 0] == 0


def test_antisymmetrize_is_idempotent_and_exact():
    rng = np.random.default_rng(7)
    for n in (2, 3, 4):
        for k in (2, 3):
            A = antisymmetrize(_random_tensor(rng, n, k))
            again = antisymmetrize(A)
            assert np.array_equal(A.entries, again.entries)
            assert is_antisymmetric(A)


def test_antisymmetric_entries_change_sign_and_vanish_on_repeats():
    rng = np.random.default_rng(11)
    A = antisymmetrize(_random_tensor(rng, 3, 3))
    for i, j, k in product(range(3), repeat=3):
        assert A.entries[i, j, k] == -A.entries[j, i, k]
        if len({i, j, k}) < 3:
            assert A.entries[i, j, k] == 0


def test_kronecker_form_matches_permutation_sum():
    rng = np.random.default_rng(3)
    for n, k in ((2, 2), (3, 2), (3, 3)):
        t = _random_tensor(rng, n, k)
        assert np.array_equal(antisymmetrize(t).entries, kronecker_antisymmetrize(t).entries)


def test_antisymmetric_tensor_is_kronecker_fixed_point():
    rng = np.random.default_rng(5)
    A = antisymmetrize(_random_tensor(rng, 3, 2))
    assert np.array_equal(kronecker_antisymmetrize(A).entries, A.entries)


def test_rank_above_dim_overflows():
    t = np.ones((2, 2, 2), dtype=np.int64)
    A = antisymmetrize(t)
    assert A.overflow
    assert A.is_zero()
    with pytest.raises(RankError):
        antisymmetrize(t, strict=True)


def test_oracle_cap():
    with pytest.raises(DimensionError):
        antisymmetrize(np.zeros((5, 5), dtype=np.int64))


def test_float_tensor_stays_float():
    A = antisymmetrize(np.array([[0.5, 1.0], [0.0, 0.25]]))
    assert A.entries.dtype == np.float64
    assert A.entries[0, 1] == pytest.approx(0.5)


def test_alternating_sum_of_antisymmetric_tensor():
    rng = np.random.default_rng(9)
    A = antisymmetrize(_random_tensor(rng, 3, 3))
    assert np.array_equal(alternating_sum(A), factorial(3) * A.entries)


# =============================================================================
# EXTERIOR PRODUCT AND MULTIVECTOR BRIDGE
# =============================================================================

def test_oracle_exterior_of_basis_vectors():
    e1 = from_blades(basis_blade(3, [1]), 1)
    e2 = from_blades(basis_blade(3, [2]), 1)
    wedge = oracle_exterior(e1, e2)
    assert wedge.entries[0, 1] == 1
    assert wedge.entries[1, 0] == -1
    assert to_blades(wedge) == basis_blade(3, [1, 2])


def test_oracle_exterior_overflow_and_mismatch():
    X = from_blades(basis_blade(2, [1, 2]), 2)
    Y = from_blades(basis_blade(2, [1]), 1)
    result = oracle_exterior(X, Y)
    assert result.overflow and result.is_zero()
    with pytest.raises(DimensionError):
        oracle_exterior(X, from_blades(basis_blade(3, [1]), 1))


def test_simple_kvector_matches_iterated_exterior():
    vectors = [[1, 2, 0], [0, 1, -1], [3, 0, 1]]
    simple = oracle_simple_kvector(vectors)
    tensors = [AntisymmetricTensor(dim=3, rank=1, entries=np.array(v)) for v in vectors]
    iterated = oracle_exterior(oracle_exterior(tensors[0], tensors[1]), tensors[2])
    assert np.array_equal(simple.entries, iterated.entries)


def test_oracle_exterior_associative_and_graded_commutative():
    rng = np.random.default_rng(23)
    for n in (3, 4):
        for p, q, r in product(range(1, n + 1), repeat=3):
            if p + q + r > n:
                continue
            for _ in range(5):
                X = from_blades(random_homogeneous(rng, n, p), p)
                Y = from_blades(random_homogeneous(rng, n, q), q)
                Z = from_blades(random_homogeneous(rng, n, r), r)
                left = oracle_exterior(oracle_exterior(X, Y), Z)
                right = oracle_exterior(X, oracle_exterior(Y, Z))
                assert np.array_equal(left.entries, right.entries)
                swapped = oracle_exterior(Y, X)
                sign = -1 if (p * q) % 2 else 1
                assert np.array_equal(oracle_exterior(X, Y).entries, sign * swapped.entries)


def test_dependent_vectors_give_zero_kvector():
    rng = np.random.default_rng(24)
    for n in (2, 3, 4):
        v = rng.integers(-3, 4, size=n).tolist()
        w = rng.integers(-3, 4, size=n).tolist()
        assert oracle_simple_kvector([v, [2 * x for x in v]]).is_zero()
        if n >= 3:
            assert oracle_simple_kvector([v, w, [a - b for a, b in zip(v, w)]]).is_zero()


def test_blade_bijection():
    rng = np.random.default_rng(21)
    for n in (2, 3, 4):
        for k in range(n + 1):
            X = random_homogeneous(rng, n, k)
            T = from_blades(X, k)
            assert to_blades(T) == X
            assert np.array_equal(from_blades(to_blades(T), k).entries, T.entries)


def test_blade_tensor_matches_from_blades():
    for indices in ((1,), (1, 3), (2, 3), (1, 2, 3)):
        assert np.array_equal(
            blade_tensor(3, indices).entries,
            from_blades(basis_blade(3, list(indices)), len(indices)).entries,
        )


def test_bridge_errors():
    with pytest.raises(GradeError):
        from_blades(Multivector(2, {(): 1, (1,): 1}), 1)
    bad = AntisymmetricTensor(dim=2, rank=2, entries=np.array([[0, 1], [1, 0]]))
    with pytest.raises(InvariantViolationError):
        to_blades(bad)


def test_oracle_wedge_skips_high_grades():
    X = Multivector(2, {(1,): 1, (1, 2): 1})
    Y = Multivector(2, {(2,): 1})
    assert oracle_wedge(X, Y) == basis_blade(2, [1, 2])


# =============================================================================
# COVECTOR EVALUATION AND SCALAR PRODUCT
# =============================================================================

def test_simple_kvector_evaluation_is_determinant():
    """(v1 ^ ... ^ vk)(w1, ..., wk) = det[w_a(v_b)]"""
    rng = np.random.default_rng(17)
    for k in (1, 2, 3):
        vs = rng.integers(-3, 4, size=(k, 3)).tolist()
        ws = rng.integers(-3, 4, size=(k, 3)).tolist()
        pairing = [[sum(w[i] * v[i] for i in range(3)) for v in vs] for w in ws]
        assert evaluate_on_covectors(oracle_simple_kvector(vs), ws) == permutation_determinant(pairing)


def test_evaluation_on_dual_basis_reads_components():
    X = Multivector(3, {(1, 2): 4, (2, 3): -2})
    T = from_blades(X, 2)
    dual = np.eye(3, dtype=np.int64).tolist()
    assert evaluate_on_covectors(T, [dual[0], dual[1]]) == 4
    assert evaluate_on_covectors(T, [dual[2], dual[1]]) == 2
    with pytest.raises(ShapeError):
        evaluate_on_covectors(T, [dual[0]])


def test_lower_indices_diagonal():
    G = [[2, 0], [0, 3]]
    T = from_blades(basis_blade(2, [1, 2]), 2)
    lowered = lower_indices(G, T)
    assert lowered.entries[0, 1] == 6
    assert lowered.entries[1, 0] == -6


def test_oracle_scalar_product_values():
    G = [[2, 0], [0, 3]]
    e12 = from_blades(basis_blade(2, [1, 2]), 2)
    e1 = from_blades(basis_blade(2, [1]), 1)
    assert oracle_scalar_product(G, e12, e12) == 6
    assert oracle_scalar_product(G, e1, e1) == 2
    assert oracle_scalar_product(G, e1, e12) == 0
    s = AntisymmetricTensor(dim=2, rank=0, entries=np.array(3))
    t = AntisymmetricTensor(dim=2, rank=0, entries=np.array(-2))
    assert oracle_scalar_product(G, s, t) == -6


def test_oracle_scalar_product_gram_determinant():
    """Blade scalar product equals the Gram determinant on a non-orthogonal metric"""
    G = [[2, 1, 0], [1, 3, 1], [0, 1, 1]]
    for I in ((1, 2), (1, 3), (2, 3)):
        for J in ((1, 2), (1, 3), (2, 3)):
            gram = [[G[i - 1][j - 1] for j in J] for i in I]
            value = oracle_scalar_product(G, blade_tensor(3, I), blade_tensor(3, J))
            assert value == permutation_determinant(gram)


def test_oracle_scalar_product_keeps_fractions_exact():
    G = [[Fraction(1, 2), 0], [0, 1]]
    e1 = from_blades(Multivector(2, {(1,): Fraction(1, 3)}), 1)
    assert oracle_scalar_product(G, e1, e1) == Fraction(1, 18)


def test_grade_part_roundtrip_through_tensors():
    X = Multivector(3, {(): 2, (1,): 1, (1, 3): -4, (1, 2, 3): 7})
    total = Multivector(3)
    for k in range(4):
        total = total + to_blades(from_blades(grade_part(X, k), k))
    assert total == X
