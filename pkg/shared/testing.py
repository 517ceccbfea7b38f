"""
Random fixtures and closeness assertions for the test suites.
"""
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

import numpy as np
from hypothesis import strategies as st

from graded_core import Multivector
from shared.numeric import Real

COEFF_RANGE = (-5, 5)


# =============================================================================
# RANDOM MULTIVECTORS (numpy rng)
# =============================================================================

def random_multivector(
    rng: np.random.Generator,
    dim: int,
    grades: Optional[Sequence[int]] = None,
    density: float = 0.5,
) -> Multivector:
    """
    Random multivector with integer coefficients in COEFF_RANGE.

    Args:
        rng: Seeded generator
        dim: Ambient dimension
        grades: Grades allowed to appear (default all)
        density: Probability that a given blade receives a coefficient
    """
    grades = range(dim + 1) if grades is None else grades
    terms = {}
    for k in grades:
        for blade in combinations(range(1, dim + 1), k):
            if rng.random() < density:
                terms[blade] = int(rng.integers(COEFF_RANGE[0], COEFF_RANGE[1] + 1))
    return Multivector(dim, terms)


def random_homogeneous(rng: np.random.Generator, dim: int, k: int) -> Multivector:
    return random_multivector(rng, dim, grades=[k], density=0.7)


def random_vector(rng: np.random.Generator, dim: int) -> Multivector:
    coords = rng.integers(COEFF_RANGE[0], COEFF_RANGE[1] + 1, size=dim)
    return Multivector(dim, {(i + 1,): int(c) for i, c in enumerate(coords)})


# =============================================================================
# RANDOM MATRICES
# =============================================================================

def random_unimodular(
    rng: np.random.Generator,
    dim: int,
    steps: int = 4,
    max_entry: int = 2,
) -> tuple[tuple[int, ...], ...]:
    """
    Integer shear with determinant +/-1 built from elementary row operations,
    every entry bounded by max_entry in absolute value.
    """
    matrix = np.eye(dim, dtype=np.int64)
    for _ in range(steps):
        if dim == 1:
            break
        i, j = rng.choice(dim, size=2, replace=False)
        candidate = matrix.copy()
        candidate[i] += int(rng.choice([-1, 1])) * candidate[j]
        if np.abs(candidate).max() <= max_entry:
            matrix = candidate
    if rng.random() < 0.5:
        matrix[0] = -matrix[0]
    return tuple(tuple(int(v) for v in row) for row in matrix)


def random_integer_metric(
    rng: np.random.Generator,
    dim: int,
    signature: Optional[Sequence[int]] = None,
) -> tuple[tuple[int, ...], ...]:
    """
    Non-orthogonal integer metric S^T D S with D = diag(+/-1) and S unimodular,
    so the inverse is integral too.
    """
    if signature is None:
        signature = [int(s) for s in rng.choice([-1, 1], size=dim)]
    S = np.array(random_unimodular(rng, dim), dtype=np.int64)
    G = S.T @ np.diag(np.array(signature, dtype=np.int64)) @ S
    return tuple(tuple(int(v) for v in row) for row in G)


def random_rational_metric(rng: np.random.Generator, dim: int) -> tuple[tuple[Fraction, ...], ...]:
    """S^T D S with S unimodular and D diagonal, entries +/-p/q for p, q in 1..4."""
    S = random_unimodular(rng, dim)
    D = [Fraction(int(rng.choice([-1, 1])) * int(rng.integers(1, 5)), int(rng.integers(1, 5))) for _ in range(dim)]
    return tuple(
        tuple(sum((S[k][i] * D[k] * S[k][j] for k in range(dim)), Fraction(0)) for j in range(dim))
        for i in range(dim)
    )


def random_float_metric(
    rng: np.random.Generator,
    dim: int,
    max_condition: float = 1e3,
    positive: bool = False,
) -> tuple[tuple[float, ...], ...]:
    """
    Random symmetric non-degenerate metric with condition number at most max_condition.

    Eigenvalue magnitudes are log-uniform in [1/sqrt(c), sqrt(c)] for
    c = max_condition; signs are random unless positive is set.
    """
    Q, _ = np.linalg.qr(rng.normal(size=(dim, dim)))
    half = np.log(max_condition) / 2
    magnitudes = np.exp(rng.uniform(-half, half, size=dim))
    signs = np.ones(dim) if positive else rng.choice([-1.0, 1.0], size=dim)
    G = Q @ np.diag(signs * magnitudes) @ Q.T
    G = (G + G.T) / 2
    return tuple(tuple(float(v) for v in row) for row in G)


# =============================================================================
# HYPOTHESIS STRATEGIES
# =============================================================================

@st.composite
def multivectors(draw, dim: int, grades: Optional[Sequence[int]] = None) -> Multivector:
    grades = range(dim + 1) if grades is None else grades
    blades = [b for k in grades for b in combinations(range(1, dim + 1), k)]
    terms = draw(st.dictionaries(
        st.sampled_from(blades),
        st.integers(COEFF_RANGE[0], COEFF_RANGE[1]),
        max_size=len(blades),
    ))
    return Multivector(dim, terms)


def vectors(dim: int) -> st.SearchStrategy:
    return multivectors(dim, grades=[1])


# =============================================================================
# ASSERTIONS
# =============================================================================

def max_difference(X: Multivector, Y: Multivector) -> float:
    blades = set(X.terms) | set(Y.terms)
    return max((abs(float(X.coefficient(b)) - float(Y.coefficient(b))) for b in blades), default=0.0)


def assert_multivectors_close(X: Multivector, Y: Multivector, tol: float = 1e-9) -> None:
    """Coefficientwise comparison, scaled by the larger operand's magnitude."""
    assert X.dim == Y.dim, f"Dimension mismatch: {X.dim} vs {Y.dim}"
    scale = max([1.0] + [abs(float(c)) for c in X.terms.values()] + [abs(float(c)) for c in Y.terms.values()])
    diff = max_difference(X, Y)
    assert diff <= tol * scale, f"Multivectors differ by {diff:.3e}:\n  {X!r}\n  {Y!r}"


def assert_reals_close(a: Real, b: Real, tol: float = 1e-9) -> None:
    scale = max(1.0, abs(float(a)), abs(float(b)))
    assert abs(float(a) - float(b)) <= tol * scale, f"{a} != {b}"
