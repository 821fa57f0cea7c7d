"""Provides the m-Bakry-Emery Ricci tensor and Killing tests."""

from qeinstein.bakry_emery.tensor import (
    BakryEmeryInput,
    QEResidual,
    bakry_emery_tensor,
    lie_derivative_metric,
    one_form_square,
    qe_residual,
)
from qeinstein.bakry_emery.killing import (
    KillingCheck,
    KillingIdentity,
    is_killing,
    killing_identity_check,
    trace_q_ad,
)


__all__ = [
    'BakryEmeryInput',
    'QEResidual',
    'bakry_emery_tensor',
    'lie_derivative_metric',
    'one_form_square',
    'qe_residual',
    'KillingCheck',
    'KillingIdentity',
    'is_killing',
    'killing_identity_check',
    'trace_q_ad',
]
