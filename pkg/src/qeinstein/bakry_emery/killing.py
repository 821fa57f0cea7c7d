"""Killing tests and the trace identity for left-invariant fields."""

from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from qeinstein.algebra import scalar
from qeinstein.algebra.structure import (
    LeftInvariantField,
    StructureConstants,
    ad_matrix,
)
from qeinstein.bakry_emery.exception import (
    ParameterException,
    PreconditionException,
)
from qeinstein.bakry_emery.tensor import (
    lie_derivative_metric,
    one_form_square,
)
from qeinstein.curvature import SymTensor3
from qeinstein.util import config, log


@dataclass(frozen=True)
class KillingCheck:
    """Result of `is_killing`, truthy when the field is Killing.

    Attributes:
        killing (`bool`): Whether both residuals are below tolerance.
        lie_residual (`Any`): Sup norm of `L_X g`.
        ad_residual (`Any`): Sup norm of `ad_X + ad_X^T`.
    """

    killing: bool
    lie_residual: Any
    ad_residual: Any

    def __bool__(self) -> bool:
        return self.killing


def is_killing(sc: StructureConstants, X: LeftInvariantField,
               tolerance: Optional[float] = None) -> KillingCheck:
    """Check whether `X` is a Killing field.

    Args:
        sc (`StructureConstants`): The bracket.
        X (`LeftInvariantField`): The field.
        tolerance (`float`, optional): Absolute tolerance. Defaults to the
            configured structural tolerance.

    Returns:
        `KillingCheck`: The verdict and both residuals.
    """

    if tolerance is None:
        tolerance = config.tolerance('structural')

    lie_residual = lie_derivative_metric(sc, X).sup_norm()
    ad_residual = scalar.max_abs(ad_matrix(sc, X).symmetrized())

    killing = (scalar.is_zero(lie_residual, tolerance)
               and scalar.is_zero(ad_residual, tolerance))

    return KillingCheck(killing, lie_residual, ad_residual)


def trace_q_ad(q: SymTensor3, sc: StructureConstants,
               X: LeftInvariantField) -> Any:
    """Get `tr(q . ad_X)`.

    Args:
        q (`SymTensor3`): A symmetric form.
        sc (`StructureConstants`): The bracket.
        X (`LeftInvariantField`): The field.

    Returns:
        `Any`: The trace.
    """

    if not isinstance(q, SymTensor3):
        raise TypeError('q must be of type SymTensor3')

    q_matrix, ad = scalar.promote(q.matrix(), ad_matrix(sc, X).matrix)

    return np.einsum('ij,ji->', q_matrix, ad)


@dataclass(frozen=True)
class KillingIdentity:
    """The terms of the trace identity
    `tr(q ad_X) = -tr(S^2) / 4 - (|X|^2 / m) tr(proj_X ad_X)` with
    `S = ad_X + ad_X^T`.

    Attributes:
        symmetric_term (`Any`): `tr(S^2) / 4`.
        projection_term (`Any`): `(|X|^2 / m) tr(proj_X ad_X)`.
        trace (`Any`): `tr(q ad_X)`.
        value (`Any`): `symmetric_term - projection_term`, zero exactly
            when `X` is Killing.
        defect (`Any`): `symmetric_term + trace + projection_term`, zero
            for every `X`.
        hypothesis_residual (`Any`): Sup norm of
            `L_X g / 2 - X* (x) X* / m - q`.
    """

    symmetric_term: Any
    projection_term: Any
    trace: Any
    value: Any
    defect: Any
    hypothesis_residual: Any


def killing_identity_check(q: SymTensor3, sc: StructureConstants,
                           X: LeftInvariantField, m: Any,
                           tolerance: Optional[float] = None
                           ) -> KillingIdentity:
    """Evaluate the trace identity behind the Killing property.

    Args:
        q (`SymTensor3`): The form `A g - Ric`.
        sc (`StructureConstants`): The bracket.
        X (`LeftInvariantField`): The field.
        m (`Any`): The nonzero parameter.
        tolerance (`float`, optional): Tolerance on the hypothesis.
            Defaults to the configured solution tolerance.

    Raises:
        ParameterException: If `m` is zero.
        PreconditionException: If `L_X g / 2 - X* (x) X* / m` differs
            from `q`.

    Returns:
        `KillingIdentity`: The identity terms.
    """

    if scalar.is_zero(m):
        raise ParameterException('m must be nonzero')

    if tolerance is None:
        tolerance = config.tolerance('solution')

    inverse_m = scalar.reciprocal(m)
    hypothesis = (lie_derivative_metric(sc, X) * scalar.reciprocal(2)
                  - one_form_square(X) * inverse_m - q)
    hypothesis_residual = hypothesis.sup_norm()

    if not scalar.is_zero(hypothesis_residual, tolerance):
        raise PreconditionException(
            f'L_X g / 2 - X* (x) X* / m != q, residual '
            f'{hypothesis_residual}',
            hypothesis_residual,
        )

    ad, a = scalar.promote(ad_matrix(sc, X).matrix, X.array())
    symmetrized = ad + ad.T

    symmetric_term = np.einsum('ij,ji->', symmetrized, symmetrized) \
        * scalar.reciprocal(4)

    # |X|^2 tr(proj_X ad_X) = a^T ad_X a, and ad_X a = [X, X] = 0
    projection_term = np.einsum('i,ij,j->', a, ad, a) * inverse_m

    trace = trace_q_ad(q, sc, X)

    identity = KillingIdentity(
        symmetric_term=symmetric_term,
        projection_term=projection_term,
        trace=trace,
        value=symmetric_term - projection_term,
        defect=symmetric_term + trace + projection_term,
        hypothesis_residual=hypothesis_residual,
    )

    log.debug('Killing identity', {
        'symmetric': symmetric_term,
        'projection': projection_term,
        'trace': trace,
    })

    return identity
