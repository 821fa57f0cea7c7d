"""Structure constants, left-invariant fields and the adjoint map.

Brackets are stored as `c[k, i, j]` with `[e_i, e_j] = sum_k c[k, i, j] e_k`
in an orthonormal frame, indices starting at 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Tuple

import numpy as np
import sympy

from qeinstein.algebra import scalar
from qeinstein.algebra.exception import JacobiIdentityException
from qeinstein.algebra.geometry import Geometry
from qeinstein.util import config


def _as_array(coefficients: Any) -> np.ndarray:
    array = np.array(coefficients, dtype=object)

    if array.shape != (3, 3, 3):
        raise ValueError(f'structure constants must have shape (3, 3, 3), '
                         f'got {array.shape}')

    values = list(array.flat)

    if any(isinstance(value, sympy.Basic) and not value.is_Rational
           for value in values):
        return array

    if all(scalar.is_exact_value(value) for value in values):
        return np.array(scalar.as_scalars(values),
                        dtype=object).reshape(3, 3, 3)

    return np.array(scalar.as_scalars(values), dtype=float).reshape(3, 3, 3)


class StructureConstants:
    """The bracket coefficients of a 3-dimensional Lie algebra.

    The array is read-only once constructed. Exact inputs (ints and
    fractions) give an object array of `Fraction`, floats give a float64
    array and sympy expressions stay symbolic.
    """

    def __init__(self, coefficients: Any, validate: bool = True):
        """Create structure constants from a 3x3x3 nested sequence.

        Args:
            coefficients (`Any`): The coefficients `c[k][i][j]`.
            validate (`bool`, optional): Whether to check antisymmetry and
                the Jacobi identity. Defaults to True.

        Raises:
            ValueError: If the shape is not (3, 3, 3).
            JacobiIdentityException: If validation fails.
        """

        self._c = _as_array(coefficients)
        self._c.flags.writeable = False

        if validate and not scalar.is_symbolic_array(self._c):
            self.validate()

    @property
    def c(self) -> np.ndarray:
        """`np.ndarray`: The read-only coefficient array."""

        return self._c

    @property
    def exact(self) -> bool:
        """`bool`: Whether the constants are on the exact path."""

        return scalar.is_exact_array(self._c)

    @property
    def symbolic(self) -> bool:
        """`bool`: Whether the constants contain free symbols."""

        return scalar.is_symbolic_array(self._c)

    def validate(self, tolerance: Optional[float] = None):
        """Check antisymmetry and the Jacobi identity.

        Args:
            tolerance (`float`, optional): Absolute tolerance for the float
                path. Defaults to the configured structural tolerance.

        Raises:
            JacobiIdentityException: If either identity fails.
        """

        if tolerance is None:
            tolerance = config.tolerance('structural')

        symmetric = self._c + np.transpose(self._c, (0, 2, 1))

        if not all(scalar.is_zero(value, tolerance)
                   for value in symmetric.flat):
            raise JacobiIdentityException(
                'structure constants are not antisymmetric'
            )

        residual = jacobi_residual(self)

        if not scalar.is_zero(residual, tolerance):
            raise JacobiIdentityException(
                f'Jacobi identity fails with residual {residual}'
            )

    def bracket(self, u: Iterable[Any], v: Iterable[Any]) -> np.ndarray:
        """Get the coefficients of `[u, v]` for frame vectors `u` and `v`.

        Args:
            u (`Iterable[Any]`): Coefficients of the first vector.
            v (`Iterable[Any]`): Coefficients of the second vector.

        Returns:
            `np.ndarray`: The three coefficients of the bracket.
        """

        u_array = np.array(list(u), dtype=self._c.dtype)
        v_array = np.array(list(v), dtype=self._c.dtype)

        return np.einsum('kij,i,j->k', self._c, u_array, v_array)

    def is_unimodular(self, tolerance: Optional[float] = None) -> bool:
        """Check that every `ad_{e_i}` is trace free.

        Args:
            tolerance (`float`, optional): Absolute tolerance for the float
                path. Defaults to the configured structural tolerance.

        Returns:
            `bool`: True if the algebra is unimodular.
        """

        if tolerance is None:
            tolerance = config.tolerance('structural')

        traces = np.einsum('jij->i', self._c)

        return all(scalar.is_zero(value, tolerance) for value in traces)

    def to_float(self) -> 'StructureConstants':
        """Get a float64 copy of the constants."""

        return StructureConstants(scalar.to_float_array(self._c),
                                  validate=False)

    def scaled(self, factor: Any) -> 'StructureConstants':
        """Multiply every coefficient by `factor`.

        Scaling the metric by `c**2` rescales an orthonormal frame by
        `1/c`, which multiplies the constants by `1/c`.
        """

        return StructureConstants(self._c * factor, validate=False)

    def __repr__(self) -> str:
        nonzero = {
            (k, i, j): self._c[k, i, j]
            for k, i, j in np.ndindex(3, 3, 3)
            if i < j and not scalar.is_zero(self._c[k, i, j])
        }

        return f'StructureConstants({nonzero})'


def jacobi_residual(sc: StructureConstants) -> Any:
    """Get the largest component of the cyclic Jacobi sum.

    Args:
        sc (`StructureConstants`): The constants to check.

    Returns:
        `Fraction` | `float` | `sympy.Expr`: The residual, exactly 0 for a
            valid exact algebra.
    """

    c = sc.c

    # [[e_i, e_j], e_k] summed over the cyclic permutations of (i, j, k)
    cyclic = (
        np.einsum('dij,fdk->fijk', c, c)
        + np.einsum('djk,fdi->fijk', c, c)
        + np.einsum('dki,fdj->fijk', c, c)
    )

    return scalar.max_abs(cyclic)


@dataclass(frozen=True)
class LeftInvariantField:
    """A left-invariant field `X = a_1 e_1 + a_2 e_2 + a_3 e_3`."""

    a: Tuple[Any, Any, Any]

    def __post_init__(self):
        values = tuple(self.a)

        if len(values) != 3:
            raise ValueError(f'a must have 3 entries, got {len(values)}')

        if not any(isinstance(value, sympy.Basic)
                   and not value.is_Rational for value in values):
            values = scalar.as_scalars(values)

        object.__setattr__(self, 'a', values)

    @classmethod
    def zero(cls) -> 'LeftInvariantField':
        """Get the zero field."""

        return cls((0, 0, 0))

    @classmethod
    def basis(cls, axis: int, coefficient: Any = 1) -> 'LeftInvariantField':
        """Get `coefficient * e_axis`.

        Args:
            axis (`int`): The frame index, 0 to 2.
            coefficient (`Any`, optional): The coefficient. Defaults to 1.

        Raises:
            ValueError: If `axis` is out of range.

        Returns:
            `LeftInvariantField`: The field.
        """

        if axis not in (0, 1, 2):
            raise ValueError(f'axis must be 0, 1 or 2, got {axis}')

        coefficients = [0, 0, 0]
        coefficients[axis] = coefficient

        return cls(tuple(coefficients))

    @property
    def exact(self) -> bool:
        """`bool`: Whether every coefficient is exact or symbolic."""

        return not any(isinstance(value, float) for value in self.a)

    def array(self) -> np.ndarray:
        """Get the coefficients as an object or float64 array."""

        if self.exact:
            return np.array(self.a, dtype=object)

        return np.array(self.a, dtype=float)

    def norm_squared(self) -> Any:
        """Get `a_1**2 + a_2**2 + a_3**2`."""

        return sum(value * value for value in self.a)

    def support(self, tolerance: float = 0.0) -> Tuple[int, ...]:
        """Get the indices of the nonzero coefficients.

        Args:
            tolerance (`float`, optional): Absolute tolerance for floats.
                Defaults to 0.0.

        Returns:
            `Tuple[int, ...]`: The support, in increasing order.
        """

        return tuple(
            index for index, value in enumerate(self.a)
            if not scalar.is_zero(value, tolerance)
        )

    def scaled(self, factor: Any) -> 'LeftInvariantField':
        """Get `factor * X`."""

        return LeftInvariantField(tuple(value * factor for value in self.a))

    def to_json(self) -> list:
        """Get the coefficients as JSON numbers."""

        return [scalar.to_json_number(value) for value in self.a]


@dataclass(frozen=True, eq=False)
class AdMatrix:
    """The matrix of `ad_X`, `matrix[j, i]` being the `e_j` coefficient of
    `[X, e_i]`."""

    matrix: np.ndarray

    def trace(self) -> Any:
        """Get the trace of the matrix."""

        return np.trace(self.matrix)

    def symmetrized(self) -> np.ndarray:
        """Get `M + M^T`."""

        return self.matrix + self.matrix.T

    def column(self, index: int) -> np.ndarray:
        """Get the coefficients of `[X, e_index]`."""

        return self.matrix[:, index]


def ad_matrix(sc: StructureConstants, X: LeftInvariantField) -> AdMatrix:
    """Get the matrix of `ad_X = [X, .]` in the frame.

    Args:
        sc (`StructureConstants`): The bracket.
        X (`LeftInvariantField`): The field.

    Raises:
        TypeError: If the arguments have the wrong types.

    Returns:
        `AdMatrix`: The matrix with `M[j, i] = sum_k a_k c[j, k, i]`.
    """

    if not isinstance(sc, StructureConstants):
        raise TypeError('sc must be of type StructureConstants')

    if not isinstance(X, LeftInvariantField):
        raise TypeError('X must be of type LeftInvariantField')

    c, a = scalar.promote(sc.c, X.array())

    return AdMatrix(np.einsum('k,jki->ji', a, c))


@dataclass(frozen=True)
class H2xRFrame:
    """The product of the hyperbolic plane of curvature `-scale**2` with a
    line, as the solvable algebra `[e_1, e_2] = scale * e_2` plus a
    central `e_3`."""

    scale: Any = Fraction(1)

    def __post_init__(self):
        value = self.scale

        if not isinstance(value, sympy.Basic):
            value = scalar.as_scalar(value)

        if value <= 0:
            raise ValueError(f'scale must be positive, got {value}')

        object.__setattr__(self, 'scale', value)

    geometry = Geometry.H2XR

    @classmethod
    def from_rho(cls, rho: Any) -> 'H2xRFrame':
        """Get the frame with `Ric = -rho` on the hyperbolic factor.

        Args:
            rho (`Any`): A positive curvature scale.

        Returns:
            `H2xRFrame`: The frame with `scale = sqrt(rho)`, exact when
                `rho` is a rational square.
        """

        rho = scalar.as_scalar(rho)

        if rho <= 0:
            raise ValueError(f'rho must be positive, got {rho}')

        if isinstance(rho, Fraction):
            root = sympy.sqrt(scalar.to_sympy(rho))

            if root.is_Rational:
                return cls(Fraction(int(root.p), int(root.q)))

            return cls(float(root))

        return cls(rho ** 0.5)

    @property
    def rho(self) -> Any:
        """The magnitude of the hyperbolic Ricci curvature."""

        return self.scale * self.scale

    def structure_constants(self) -> StructureConstants:
        """Get the bracket of the frame."""

        c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
        c[1][0][1] = self.scale
        c[1][1][0] = -self.scale

        return StructureConstants(c)

    def to_json(self) -> Dict[str, Any]:
        """Get the JSON description of the frame."""

        return {
            'group': self.geometry.value,
            'scale': scalar.to_json_number(self.scale),
        }


def h2xr_structure() -> StructureConstants:
    """Get the unit H^2xR bracket, `[e_1, e_2] = e_2`."""

    return H2xRFrame().structure_constants()
