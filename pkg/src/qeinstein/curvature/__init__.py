"""Provides curvature of left-invariant metrics from structure constants."""

from qeinstein.curvature.tensor import SymTensor3
from qeinstein.curvature.connection import (
    ConnectionCoefficients,
    levi_civita,
    riemann_tensor,
    sectional_curvature,
)
from qeinstein.curvature.ricci import (
    FLAT_ROUTES,
    RICCI_SIGNATURE_TABLE,
    RicciSignature,
    is_attainable,
    principal_ricci_closed_form,
    ricci_signature,
    ricci_tensor,
)
from qeinstein.curvature.chart import H2Chart, h2_chart_connection


__all__ = [
    'SymTensor3',
    'ConnectionCoefficients',
    'levi_civita',
    'riemann_tensor',
    'sectional_curvature',
    'FLAT_ROUTES',
    'RICCI_SIGNATURE_TABLE',
    'RicciSignature',
    'is_attainable',
    'principal_ricci_closed_form',
    'ricci_signature',
    'ricci_tensor',
    'H2Chart',
    'h2_chart_connection',
]
