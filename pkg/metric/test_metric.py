"""
Tests for metric construction, scalar products and frames.
"""
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from exterior import wedge_all
from graded_core import Multivector, basis_blade, grade_part, linear_combination, scalar, zero
from metric import (
    MetricTensor,
    blade_gram_matrix,
    change_basis,
    contravariant_components,
    covariant_components,
    expand_vector,
    frame_vectors,
    from_frame,
    lower_components,
    make_algebra,
    parse_metric_spec,
    reciprocal_frame,
    scalar_product,
    simple_scalar_product,
    to_frame,
)
from shared.errors import DegenerateMetricError, DimensionError, GradeError, InvalidMetricError
from shared.linalg import determinant
from shared.testing import (
    multivectors,
    random_float_metric,
    random_homogeneous,
    random_integer_metric,
    random_multivector,
    random_rational_metric,
    random_unimodular,
    random_vector,
)
from tensor_oracle import oracle_multivector_scalar_product


def e(dim, *indices):
    return basis_blade(dim, list(indices))


NON_ORTHOGONAL_3 = [[2, 1, 0], [1, 3, 1], [0, 1, -1]]


# =============================================================================
# CONSTRUCTION
# =============================================================================

def test_euclidean_reciprocal_is_standard_basis():
    A = make_algebra(MetricTensor.euclidean(3))
    assert A.exact
    for k in range(1, 4):
        assert A.reciprocal_vector(k) == e(3, k)


def test_diagonal_reciprocal():
    A = make_algebra(MetricTensor.diagonal([2, 3]))
    assert A.reciprocal_vector(1) == Multivector(2, {(1,): Fraction(1, 2)})
    assert A.reciprocal_vector(2) == Multivector(2, {(2,): Fraction(1, 3)})


def test_indefinite_metric_accepted():
    A = make_algebra([[0, 1], [1, 0]])
    assert A.reciprocal_vector(1) == e(2, 2)
    assert A.reciprocal_vector(2) == e(2, 1)


def test_float_metric_inverse():
    A = make_algebra([[2.0, 0.5], [0.5, 1.0]])
    assert not A.exact
    for j in range(1, 3):
        for k in range(1, 3):
            expected = 1.0 if j == k else 0.0
            assert scalar_product(A, A.reciprocal_vector(k), e(2, j)) == pytest.approx(expected, abs=1e-12)


def test_invalid_metrics():
    with pytest.raises(InvalidMetricError):
        make_algebra([[1, 2], [0, 1]])
    with pytest.raises(InvalidMetricError):
        make_algebra([[1, 0, 0], [0, 1, 0]])
    with pytest.raises(DegenerateMetricError):
        make_algebra([[1, 1], [1, 1]])
    with pytest.raises(DegenerateMetricError):
        make_algebra([[1.0, 1.0], [1.0, 1.0 + 1e-14]])


def test_metric_tensor_is_frozen():
    G = MetricTensor.diagonal([1, -1])
    with pytest.raises(Exception):
        G.dim = 3


# =============================================================================
# SCALAR PRODUCT
# =============================================================================

def test_scalar_product_examples():
    euclid = make_algebra(MetricTensor.euclidean(2))
    diag = make_algebra(MetricTensor.diagonal([2, 3]))
    assert scalar_product(euclid, e(2, 1, 2), e(2, 1, 2)) == 1
    assert scalar_product(diag, e(2, 1), e(2, 1, 2)) == 0
    assert scalar_product(diag, e(2, 1, 2), e(2, 1, 2)) == 6
    assert scalar_product(diag, scalar(2, 2), scalar(2, 3)) == 6


def test_scalar_product_dimension_mismatch():
    A = make_algebra(MetricTensor.euclidean(2))
    with pytest.raises(DimensionError):
        scalar_product(A, zero(3), zero(3))


def test_vector_case_is_metric_entry():
    A = make_algebra(NON_ORTHOGONAL_3)
    for i in range(1, 4):
        for j in range(1, 4):
            assert scalar_product(A, e(3, i), e(3, j)) == NON_ORTHOGONAL_3[i - 1][j - 1]


def test_reciprocal_duality():
    A = make_algebra(NON_ORTHOGONAL_3)
    for j in range(1, 4):
        for k in range(1, 4):
            assert scalar_product(A, A.reciprocal_vector(k), e(3, j)) == (1 if j == k else 0)
            assert scalar_product(A, A.reciprocal_vector(j), A.reciprocal_vector(k)) == A.G_inv(j, k)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_scalar_product_matches_tensor_oracle(n):
    """Gram-determinant path agrees with the component formula on random metrics"""
    rng = np.random.default_rng(2000 + n)
    for trial in range(1000):
        if trial % 50 == 0:
            G = random_integer_metric(rng, n)
            A = make_algebra(G)
        X = random_multivector(rng, n, density=0.4)
        Y = random_multivector(rng, n, density=0.4)
        assert scalar_product(A, X, Y) == oracle_multivector_scalar_product(G, X, Y)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_scalar_product_matches_tensor_oracle_on_rational_metrics(n):
    rng = np.random.default_rng(2100 + n)
    for trial in range(300):
        if trial % 50 == 0:
            G = random_rational_metric(rng, n)
            A = make_algebra(G)
            assert A.exact
        X = random_multivector(rng, n, density=0.4)
        Y = random_multivector(rng, n, density=0.4)
        assert scalar_product(A, X, Y) == oracle_multivector_scalar_product(G, X, Y)


@settings(max_examples=100, deadline=None)
@given(multivectors(3), multivectors(3), multivectors(3))
def test_symmetric_and_bilinear(X, Y, Z):
    A = make_algebra(NON_ORTHOGONAL_3)
    assert scalar_product(A, X, Y) == scalar_product(A, Y, X)
    assert scalar_product(A, X + Y, Z) == scalar_product(A, X, Z) + scalar_product(A, Y, Z)
    assert scalar_product(A, 3 * X, Y) == 3 * scalar_product(A, X, Y)
    assert scalar_product(A, X, 3 * Y) == 3 * scalar_product(A, X, Y)


@settings(max_examples=100, deadline=None)
@given(multivectors(3), multivectors(3))
def test_cross_grades_vanish(X, Y):
    A = make_algebra(NON_ORTHOGONAL_3)
    for p in range(4):
        for q in range(4):
            if p != q:
                assert scalar_product(A, grade_part(X, p), grade_part(Y, q)) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_blade_gram_matrix_is_non_degenerate(n):
    rng = np.random.default_rng(n)
    for _ in range(20):
        A = make_algebra(random_float_metric(rng, n, max_condition=1e3))
        gram = np.array(blade_gram_matrix(A), dtype=float)
        assert gram.shape == (2 ** n, 2 ** n)
        singular_values = np.linalg.svd(gram, compute_uv=False)
        assert singular_values.min() > 1e-8 * singular_values.max()


def test_exact_blade_gram_determinant_is_nonzero():
    rng = np.random.default_rng(77)
    for n in (1, 2, 3):
        A = make_algebra(random_integer_metric(rng, n))
        assert determinant(blade_gram_matrix(A)) != 0


def test_simple_scalar_product_matches_wedge():
    rng = np.random.default_rng(31)
    A = make_algebra(NON_ORTHOGONAL_3)
    for k in range(1, 4):
        vs = [random_vector(rng, 3) for _ in range(k)]
        ws = [random_vector(rng, 3) for _ in range(k)]
        assert simple_scalar_product(A, vs, ws) == scalar_product(A, wedge_all(*vs), wedge_all(*ws))


# =============================================================================
# COMPONENTS
# =============================================================================

def test_components_examples():
    A = make_algebra(MetricTensor.diagonal([2, 3]))
    X = e(2, 1, 2)
    assert contravariant_components(A, X, 2) == {(1, 2): 1}
    assert covariant_components(A, X, 2) == {(1, 2): 6}
    assert contravariant_components(A, zero(2), 1) == {(1,): 0, (2,): 0}


def test_euclidean_components_coincide():
    A = make_algebra(MetricTensor.euclidean(3))
    X = Multivector(3, {(1, 2): 4, (2, 3): -1})
    expected = {(1, 2): 4, (1, 3): 0, (2, 3): -1}
    assert contravariant_components(A, X, 2) == expected
    assert covariant_components(A, X, 2) == expected


def test_components_reject_mixed_grades():
    A = make_algebra(MetricTensor.euclidean(2))
    with pytest.raises(GradeError):
        contravariant_components(A, Multivector(2, {(): 1, (1,): 1}), 1)
    with pytest.raises(GradeError):
        covariant_components(A, e(2, 1), 2)


def test_contravariant_components_reconstruct():
    rng = np.random.default_rng(41)
    A = make_algebra(random_integer_metric(rng, 4))
    for k in range(5):
        X = random_homogeneous(rng, 4, k)
        table = contravariant_components(A, X, k)
        rebuilt = Multivector(4, table)
        assert rebuilt == X


def test_lowering_relation():
    """Covariant components are Gram-determinant lowered contravariant components"""
    rng = np.random.default_rng(43)
    for n in (2, 3, 4):
        A = make_algebra(random_integer_metric(rng, n))
        for k in range(n + 1):
            X = random_homogeneous(rng, n, k)
            table = contravariant_components(A, X, k)
            assert lower_components(A, table, k) == covariant_components(A, X, k)


def test_vector_expansions():
    A = make_algebra(NON_ORTHOGONAL_3)
    v = Multivector(3, {(1,): 2, (2,): -1, (3,): 5})
    contravariant, covariant = expand_vector(A, v)
    assert linear_combination(3, [(c, e(3, k + 1)) for k, c in enumerate(contravariant)]) == v
    assert linear_combination(3, [(c, A.reciprocal_vector(k + 1)) for k, c in enumerate(covariant)]) == v


# =============================================================================
# FRAMES
# =============================================================================

def test_reciprocal_frame_duality():
    A = make_algebra(NON_ORTHOGONAL_3)
    frame = frame_vectors([[1, 1, 0], [0, 1, 2], [1, 0, 1]])
    dual = reciprocal_frame(A, frame)
    for a in range(3):
        for b in range(3):
            assert scalar_product(A, dual[a], frame[b]) == (1 if a == b else 0)


def test_reciprocal_frame_of_standard_basis():
    A = make_algebra(NON_ORTHOGONAL_3)
    dual = reciprocal_frame(A, [e(3, 1), e(3, 2), e(3, 3)])
    assert dual == A.reciprocal


def test_dependent_frame_rejected():
    A = make_algebra(MetricTensor.euclidean(2))
    with pytest.raises(DegenerateMetricError):
        reciprocal_frame(A, [e(2, 1), 2 * e(2, 1)])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_change_basis_preserves_scalar_product(n):
    rng = np.random.default_rng(500 + n)
    A = make_algebra(random_integer_metric(rng, n))
    S = random_unimodular(rng, n)
    B = change_basis(A, S)
    for _ in range(50):
        X = random_multivector(rng, n)
        Y = random_multivector(rng, n)
        Xs, Ys = to_frame(S, X), to_frame(S, Y)
        assert from_frame(S, Xs) == X
        assert scalar_product(B, Xs, Ys) == scalar_product(A, X, Y)


# =============================================================================
# METRIC SPECIFICATIONS
# =============================================================================

def test_parse_metric_spec(tmp_path):
    assert parse_metric_spec("euclidean", 2) == MetricTensor.euclidean(2)
    diag = parse_metric_spec("diag:0.5,-1", 2)
    assert diag.matrix == ((Fraction(1, 2), 0), (0, -1))
    path = tmp_path / "metric.json"
    path.write_text(json.dumps({"dim": 2, "matrix": [[0, 1], [1, 0]]}))
    assert parse_metric_spec(f"file:{path}", 2).matrix == ((0, 1), (1, 0))
    with pytest.raises(DimensionError):
        parse_metric_spec(f"file:{path}", 3)
    with pytest.raises(DimensionError):
        parse_metric_spec("diag:1,2,3", 2)


def test_parse_metric_spec_errors(tmp_path):
    with pytest.raises(InvalidMetricError):
        parse_metric_spec("minkowski", 2)
    with pytest.raises(InvalidMetricError):
        parse_metric_spec("diag:1,x", 2)
    with pytest.raises(InvalidMetricError):
        parse_metric_spec(f"file:{tmp_path / 'missing.json'}", 2)
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "matrix": "identity"}')
    with pytest.raises(InvalidMetricError):
        parse_metric_spec(f"file:{bad}", 2)
    asym = tmp_path / "asym.json"
    asym.write_text(json.dumps({"dim": 2, "matrix": [[1, 2], [3, 1]]}))
    with pytest.raises(InvalidMetricError):
        parse_metric_spec(f"file:{asym}", 2)
