from dataclasses import dataclass, field

import numpy as np

from config import get_limit
from shared.errors import DimensionError, ShapeError


@dataclass(frozen=True, eq=False)
class AntisymmetricTensor:
    """
    Dense contravariant rank-k tensor over an n-dimensional space.

    entries[i1-1, ..., ik-1] holds the component t^{i1...ik}; rank 0 is a
    0-d array holding the scalar. Integer entries use int64, exact rationals
    an object array of Fractions, everything else float64.
    """
    dim: int
    rank: int
    entries: np.ndarray = field(repr=False)
    overflow: bool = False
    """True when rank exceeds dim, so the tensor is identically zero"""

    def __post_init__(self):
        max_dim = get_limit("oracle_max_dim")
        if not 1 <= self.dim <= max_dim:
            raise DimensionError(f"Oracle dimension must be in 1..{max_dim}, got {self.dim}")
        expected = (self.dim,) * self.rank
        if self.entries.shape != expected:
            raise ShapeError(f"Expected entries of shape {expected}, got {self.entries.shape}")
        self.entries.flags.writeable = False

    def component(self, indices) -> object:
        """t^{i1...ik} for 1-based indices."""
        return self.entries[tuple(i - 1 for i in indices)]

    def is_zero(self) -> bool:
        return not np.any(self.entries != 0)
