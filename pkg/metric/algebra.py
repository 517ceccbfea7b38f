"""
Algebra: a metric together with its inverse, reciprocal basis and the memo
tables every product path shares.
"""
from dataclasses import dataclass, field
from typing import Optional

from exterior import wedge_all
from graded_core import BladeIndex, Multivector
from shared.linalg import Matrix, determinant
from shared.numeric import Real
from .models import MetricTensor


@dataclass(eq=False)
class Algebra:
    """
    Geometric algebra over an n-dimensional space with metric G.

    Attributes:
        dim: Ambient dimension n
        metric: Validated metric tensor G_jk
        inv_metric: Inverse matrix G^{jk}
        reciprocal: Reciprocal vectors e^k = G^{ks} e_s, index k-1
        exact: True when every metric entry is int or Fraction

    The memo tables only ever gain entries; `cayley` is assigned once, whole.
    """
    dim: int
    metric: MetricTensor
    inv_metric: Matrix
    reciprocal: tuple[Multivector, ...]
    exact: bool

    _gram: dict = field(default_factory=dict, repr=False)
    _reciprocal_blades: dict = field(default_factory=dict, repr=False)
    left_cache: dict = field(default_factory=dict, repr=False)
    right_cache: dict = field(default_factory=dict, repr=False)
    product_cache: dict = field(default_factory=dict, repr=False)
    cayley: Optional[dict] = field(default=None, repr=False)

    def G(self, j: int, k: int) -> Real:
        """G_jk, 1-based."""
        return self.metric.matrix[j - 1][k - 1]

    def G_inv(self, j: int, k: int) -> Real:
        """G^{jk}, 1-based."""
        return self.inv_metric[j - 1][k - 1]

    def blade_scalar_product(self, left: BladeIndex, right: BladeIndex) -> Real:
        """
        e_I . e_J: the Gram determinant det[G_{i_a j_b}], zero across grades.
        """
        if len(left) != len(right):
            return 0
        key = (left, right)
        value = self._gram.get(key)
        if value is None:
            if not left:
                value = 1
            else:
                value = determinant([[self.G(i, j) for j in right] for i in left])
            self._gram[key] = value
            self._gram[(right, left)] = value
        return value

    def reciprocal_vector(self, k: int) -> Multivector:
        return self.reciprocal[k - 1]

    def reciprocal_blade(self, blade: BladeIndex) -> Multivector:
        """e^I = e^{i1} ^ ... ^ e^{ik}, expanded on the canonical blades."""
        value = self._reciprocal_blades.get(blade)
        if value is None:
            value = wedge_all(*(self.reciprocal[i - 1] for i in blade), dim=self.dim)
            self._reciprocal_blades[blade] = value
        return value
