"""
Tests for the geometric product and its Cayley table.
"""
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest
from hypothesis import given, settings

from clifford_product import cayley_table, geometric_product, product_vector, vector_product
from contraction import left_contract, right_contract
from exterior import wedge
from graded_core import Multivector, basis_blade, iter_blades, merge_sign, scalar, zero
from metric import MetricTensor, make_algebra, scalar_product
from shared.errors import DimensionError, GradeError
from shared.testing import multivectors, random_integer_metric, random_multivector, vectors

NON_ORTHOGONAL_3 = make_algebra([[2, 1, 0], [1, 3, 1], [0, 1, -1]])


def e(dim, *indices):
    return basis_blade(dim, list(indices))


def test_euclidean_examples():
    A = make_algebra(MetricTensor.euclidean(2))
    assert geometric_product(A, e(2, 1, 2), e(2, 1, 2)) == scalar(2, -1)
    assert geometric_product(A, e(2, 1), e(2, 1)) == scalar(2, 1)
    assert geometric_product(A, e(2, 1), e(2, 2)) == e(2, 1, 2)
    assert geometric_product(A, e(2, 2), e(2, 1)) == -e(2, 1, 2)


def test_indefinite_examples():
    A = make_algebra(MetricTensor.diagonal([1, -1]))
    assert geometric_product(A, e(2, 2), e(2, 2)) == scalar(2, -1)
    assert geometric_product(A, e(2, 1, 2), e(2, 1, 2)) == scalar(2, 1)


def test_scalars_scale():
    X = Multivector(3, {(1,): 2, (1, 3): -1})
    assert geometric_product(NON_ORTHOGONAL_3, scalar(3, 4), X) == 4 * X
    assert geometric_product(NON_ORTHOGONAL_3, X, scalar(3, 4)) == 4 * X


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        geometric_product(NON_ORTHOGONAL_3, zero(2), zero(3))


def test_vector_axioms_require_vectors():
    with pytest.raises(GradeError):
        vector_product(NON_ORTHOGONAL_3, e(3, 1, 2), e(3, 1))
    with pytest.raises(GradeError):
        product_vector(NON_ORTHOGONAL_3, e(3, 1), e(3, 1, 2))


@settings(max_examples=100, deadline=None)
@given(vectors(3), multivectors(3))
def test_vector_decomposition(v, X):
    A = NON_ORTHOGONAL_3
    assert geometric_product(A, v, X) == left_contract(A, v, X) + wedge(v, X)
    assert geometric_product(A, X, v) == right_contract(A, X, v) + wedge(X, v)
    assert vector_product(A, v, X) == geometric_product(A, v, X)
    assert product_vector(A, X, v) == geometric_product(A, X, v)


@settings(max_examples=100, deadline=None)
@given(vectors(3), vectors(3))
def test_symmetric_part_is_scalar_product(v, w):
    A = NON_ORTHOGONAL_3
    symmetric = geometric_product(A, v, w) + geometric_product(A, w, v)
    assert symmetric == scalar(3, 2 * scalar_product(A, v, w))


@settings(max_examples=500, deadline=None)
@given(multivectors(3), multivectors(3), multivectors(3))
def test_distributive(X, Y, Z):
    A = NON_ORTHOGONAL_3
    assert geometric_product(A, X, Y + Z) == geometric_product(A, X, Y) + geometric_product(A, X, Z)
    assert geometric_product(A, X + Y, Z) == geometric_product(A, X, Z) + geometric_product(A, Y, Z)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_associative(n):
    rng = np.random.default_rng(5000 + n)
    for trial in range(500):
        if trial % 100 == 0:
            A = make_algebra(random_integer_metric(rng, n))
        X, Y, Z = (random_multivector(rng, n, density=0.4) for _ in range(3))
        left = geometric_product(A, geometric_product(A, X, Y), Z)
        right = geometric_product(A, X, geometric_product(A, Y, Z))
        assert left == right


def test_diagonal_metric_matches_sign_rule():
    """On a diagonal metric e_I e_J = sign(I, J) prod_{i in I & J} G_ii e_{I xor J}"""
    diagonal = [2, -1, 3, 5]
    A = make_algebra(MetricTensor.diagonal(diagonal))
    for I in iter_blades(4):
        for J in iter_blades(4):
            sign = 1
            remaining = list(J)
            result = list(I)
            # move each index of J leftwards into place, squaring out repeats
            for j in remaining:
                position = sum(1 for i in result if i > j)
                sign *= (-1) ** position
                if j in result:
                    sign *= diagonal[j - 1]
                    result.remove(j)
                else:
                    result.append(j)
                    result.sort()
            expected = Multivector(4, {tuple(result): sign})
            assert geometric_product(A, e(4, *I), e(4, *J)) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_cayley_table_matches_recursion(n):
    rng = np.random.default_rng(6000 + n)
    G = random_integer_metric(rng, n)
    tabled = make_algebra(G)
    table = cayley_table(tabled)
    assert len(table) == 4 ** n
    assert tabled.cayley is table
    fresh = make_algebra(G)
    for (I, J), product in table.items():
        assert geometric_product(fresh, e(n, *I), e(n, *J)) == product
    X = random_multivector(rng, n, density=0.3)
    Y = random_multivector(rng, n, density=0.3)
    assert geometric_product(tabled, X, Y) == geometric_product(fresh, X, Y)
    assert cayley_table(tabled) is table


def test_products_stay_consistent_while_table_is_built():
    rng = np.random.default_rng(6100)
    G = random_integer_metric(rng, 4)
    shared_algebra = make_algebra(G)
    reference = make_algebra(G)
    pairs = [(random_multivector(rng, 4), random_multivector(rng, 4)) for _ in range(40)]
    expected = [geometric_product(reference, X, Y) for X, Y in pairs]

    def work(i):
        if i == 10:
            cayley_table(shared_algebra)
        X, Y = pairs[i]
        return geometric_product(shared_algebra, X, Y)

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(work, range(len(pairs))))
    assert results == expected
    assert shared_algebra.cayley is not None


def test_orthogonal_blades_anticommute_by_merge_sign():
    A = make_algebra(MetricTensor.euclidean(4))
    for I in iter_blades(4):
        for J in iter_blades(4):
            sign, blade = merge_sign(I, J)
            if sign:
                assert geometric_product(A, e(4, *I), e(4, *J)) == Multivector(4, {blade: sign})
