"""The m-Bakry-Emery Ricci tensor of a left-invariant field.

`ric_X^m = Ric + L_X g / 2 - X* (x) X* / m`, read in an orthonormal frame
where `g` is the identity.
"""

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from qeinstein.algebra import scalar
from qeinstein.algebra.structure import (
    LeftInvariantField,
    StructureConstants,
    ad_matrix,
)
from qeinstein.bakry_emery.exception import ParameterException
from qeinstein.curvature import SymTensor3, ricci_tensor
from qeinstein.util import config


def _check_m(m: Any) -> Any:
    if scalar.is_zero(m):
        raise ParameterException('m must be nonzero')

    return m


def lie_derivative_metric(sc: StructureConstants,
                          X: LeftInvariantField) -> SymTensor3:
    """Get `L_X g` for a left-invariant field.

    `L_X g(e_i, e_j) = -g([X, e_i], e_j) - g(e_i, [X, e_j])`, the negated
    symmetrized adjoint matrix.

    Args:
        sc (`StructureConstants`): The bracket.
        X (`LeftInvariantField`): The field.

    Returns:
        `SymTensor3`: The Lie derivative of the metric.
    """

    symmetrized = ad_matrix(sc, X).symmetrized()

    return SymTensor3.from_matrix(-symmetrized, symmetrize=False)


def one_form_square(X: LeftInvariantField) -> SymTensor3:
    """Get `X* (x) X*` with `X*(Y) = g(X, Y)`, entries `a_i a_j`."""

    if not isinstance(X, LeftInvariantField):
        raise TypeError('X must be of type LeftInvariantField')

    a = X.array()

    return SymTensor3.from_matrix(np.outer(a, a), symmetrize=False)


@dataclass(frozen=True, eq=False)
class BakryEmeryInput:
    """The data of one Bakry-Emery evaluation.

    Use `BakryEmeryInput.create` to compute `ric` from `sc`; a supplied
    `ric` is checked against a recomputation.
    """

    sc: StructureConstants
    ric: SymTensor3
    X: LeftInvariantField
    m: Any
    verify: bool = field(default=True, repr=False)

    def __post_init__(self):
        _check_m(self.m)

        if not self.verify or self.sc.symbolic:
            return

        difference = (self.ric - ricci_tensor(self.sc)).sup_norm()

        if not scalar.is_zero(difference, config.tolerance('structural')):
            raise ParameterException(
                f'ric does not match the structure constants, off by '
                f'{difference}'
            )

    @classmethod
    def create(cls, sc: StructureConstants, X: LeftInvariantField, m: Any,
               ric: Optional[SymTensor3] = None) -> 'BakryEmeryInput':
        """Create an input, computing `ric` when not given."""

        _check_m(m)

        if ric is None:
            return cls(sc, ricci_tensor(sc), X, m, verify=False)

        return cls(sc, ric, X, m)


def bakry_emery_tensor(data: BakryEmeryInput) -> SymTensor3:
    """Get `ric_X^m = Ric + L_X g / 2 - X* (x) X* / m`.

    Args:
        data (`BakryEmeryInput`): The evaluation data.

    Raises:
        ParameterException: If `m` is zero.

    Returns:
        `SymTensor3`: The tensor.
    """

    if not isinstance(data, BakryEmeryInput):
        raise TypeError('data must be of type BakryEmeryInput')

    _check_m(data.m)

    lie = lie_derivative_metric(data.sc, data.X)
    square = one_form_square(data.X)

    return (data.ric + lie * scalar.reciprocal(2)
            - square * scalar.reciprocal(data.m))


@dataclass(frozen=True, eq=False)
class QEResidual:
    """`ric_X^m - A g` and its size."""

    tensor: SymTensor3
    A: Any
    sup_norm: Any

    def is_solution(self, tolerance: Optional[float] = None) -> bool:
        """Check the residual against `tolerance`, the configured solution
        tolerance by default."""

        if tolerance is None:
            tolerance = config.tolerance('solution')

        return scalar.is_zero(self.sup_norm, tolerance)


def qe_residual(sc: StructureConstants, X: LeftInvariantField, m: Any,
                A: Any, ric: Optional[SymTensor3] = None) -> QEResidual:
    """Evaluate the m-quasi Einstein equation `ric_X^m = A g`.

    Args:
        sc (`StructureConstants`): The bracket.
        X (`LeftInvariantField`): The field.
        m (`Any`): The nonzero parameter.
        A (`Any`): The Einstein constant.
        ric (`SymTensor3`, optional): A precomputed Ricci tensor.

    Returns:
        `QEResidual`: The residual tensor and its sup norm.
    """

    tensor = bakry_emery_tensor(BakryEmeryInput.create(sc, X, m, ric))
    residual = tensor - SymTensor3.identity(A)

    return QEResidual(residual, A, residual.sup_norm())
