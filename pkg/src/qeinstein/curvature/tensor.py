"""Symmetric bilinear forms in frame coordinates."""

from typing import Any, Iterable, List, Optional, Tuple

import numpy as np
import sympy

from qeinstein.algebra import scalar
from qeinstein.util import config


# Storage order of the six independent entries
ENTRY_INDICES: Tuple[Tuple[int, int], ...] = (
    (0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2),
)


class SymTensor3:
    """A symmetric bilinear form on a 3-dimensional frame.

    Only the six independent entries are stored, so symmetry holds by
    construction. The entries keep the exact, float or symbolic kind they
    were given.
    """

    def __init__(self, entries: Iterable[Any]):
        """Create a tensor from `[t11, t22, t33, t12, t13, t23]`.

        Args:
            entries (`Iterable[Any]`): The six entries.

        Raises:
            ValueError: If there are not six entries.
        """

        values = list(entries)

        if len(values) != 6:
            raise ValueError(f'entries must have 6 values, got {len(values)}')

        if any(isinstance(value, sympy.Basic) and not value.is_Rational
               for value in values):
            self._entries = tuple(values)

        else:
            self._entries = scalar.as_scalars(values)

    @classmethod
    def from_matrix(cls, matrix: Any, symmetrize: bool = True
                    ) -> 'SymTensor3':
        """Create a tensor from a 3x3 matrix.

        Args:
            matrix (`Any`): The matrix.
            symmetrize (`bool`, optional): Whether to average the matrix
                with its transpose first. Defaults to True; when False only
                the upper triangle is read.

        Returns:
            `SymTensor3`: The tensor.
        """

        matrix = np.asarray(matrix)

        if matrix.shape != (3, 3):
            raise ValueError(f'matrix must have shape (3, 3), got '
                             f'{matrix.shape}')

        if symmetrize:
            matrix = scalar.half(matrix + matrix.T)

        return cls(matrix[i, j] for i, j in ENTRY_INDICES)

    @classmethod
    def zero(cls) -> 'SymTensor3':
        """Get the zero form."""

        return cls([0] * 6)

    @classmethod
    def identity(cls, factor: Any = 1) -> 'SymTensor3':
        """Get `factor * g`, `g` being the frame metric."""

        return cls([factor, factor, factor, 0, 0, 0])

    @classmethod
    def diagonal_of(cls, values: Iterable[Any]) -> 'SymTensor3':
        """Get the diagonal form with the three given values."""

        values = list(values)

        return cls(values + [0, 0, 0])

    @property
    def entries(self) -> Tuple[Any, ...]:
        """`Tuple`: The six entries in storage order."""

        return self._entries

    @property
    def exact(self) -> bool:
        """`bool`: Whether no entry is a float."""

        return not any(isinstance(value, float) for value in self._entries)

    def __getitem__(self, index: Tuple[int, int]) -> Any:
        i, j = sorted(index)

        return self._entries[ENTRY_INDICES.index((i, j))]

    def matrix(self) -> np.ndarray:
        """Get the full symmetric 3x3 matrix."""

        dtype = object if self.exact else float
        matrix = np.empty((3, 3), dtype=dtype)

        for (i, j), value in zip(ENTRY_INDICES, self._entries):
            matrix[i, j] = value
            matrix[j, i] = value

        return matrix

    def diagonal(self) -> Tuple[Any, Any, Any]:
        """Get `(t11, t22, t33)`."""

        return self._entries[:3]

    def off_diagonal(self) -> Tuple[Any, Any, Any]:
        """Get `(t12, t13, t23)`."""

        return self._entries[3:]

    def is_diagonal(self, tolerance: Optional[float] = None) -> bool:
        """Check that every off-diagonal entry is zero.

        Args:
            tolerance (`float`, optional): Absolute tolerance for floats.
                Defaults to the configured structural tolerance.
        """

        if tolerance is None:
            tolerance = config.tolerance('structural')

        return all(scalar.is_zero(value, tolerance)
                   for value in self.off_diagonal())

    def sup_norm(self) -> Any:
        """Get the largest absolute entry."""

        return scalar.max_abs(np.array(self._entries, dtype=object))

    def simplify(self) -> 'SymTensor3':
        """Simplify symbolic entries."""

        return SymTensor3(
            sympy.simplify(value) if isinstance(value, sympy.Basic)
            else value for value in self._entries
        )

    def substitute(self, substitutions: dict) -> 'SymTensor3':
        """Substitute values for the symbols of symbolic entries."""

        return SymTensor3(
            sympy.simplify(value.subs(substitutions))
            if isinstance(value, sympy.Basic) else value
            for value in self._entries
        )

    def to_float(self) -> 'SymTensor3':
        """Get a float copy."""

        return SymTensor3(float(value) for value in self._entries)

    def to_json(self) -> List[Any]:
        """Get `[t11, t22, t33, t12, t13, t23]` as JSON numbers."""

        return [scalar.to_json_number(value) for value in self._entries]

    def _combine(self, other: 'SymTensor3', sign: int) -> 'SymTensor3':
        if not isinstance(other, SymTensor3):
            return NotImplemented

        return SymTensor3(
            left + sign * right
            for left, right in zip(self._entries, other._entries)
        )

    def __add__(self, other: 'SymTensor3') -> 'SymTensor3':
        return self._combine(other, 1)

    def __sub__(self, other: 'SymTensor3') -> 'SymTensor3':
        return self._combine(other, -1)

    def __mul__(self, factor: Any) -> 'SymTensor3':
        if isinstance(factor, SymTensor3):
            return NotImplemented

        return SymTensor3(value * factor for value in self._entries)

    __rmul__ = __mul__

    def __neg__(self) -> 'SymTensor3':
        return self * -1

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SymTensor3):
            return NotImplemented

        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f'SymTensor3({list(self._entries)})'
