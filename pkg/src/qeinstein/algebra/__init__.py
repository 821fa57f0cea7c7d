"""Provides 3-dimensional Lie algebras by their structure constants."""

from qeinstein.algebra.geometry import SIGN_PATTERNS, Geometry
from qeinstein.algebra.structure import (
    AdMatrix,
    H2xRFrame,
    LeftInvariantField,
    StructureConstants,
    ad_matrix,
    h2xr_structure,
    jacobi_residual,
)
from qeinstein.algebra.milnor import (
    MilnorFrame,
    SignClassification,
    classify_group_from_signs,
    milnor_to_structure,
    structure_from_lambda_star,
    symbolic_lambda_star,
    symbolic_milnor_frame,
)


__all__ = [
    'SIGN_PATTERNS',
    'Geometry',
    'AdMatrix',
    'H2xRFrame',
    'LeftInvariantField',
    'StructureConstants',
    'ad_matrix',
    'h2xr_structure',
    'jacobi_residual',
    'MilnorFrame',
    'SignClassification',
    'classify_group_from_signs',
    'milnor_to_structure',
    'structure_from_lambda_star',
    'symbolic_lambda_star',
    'symbolic_milnor_frame',
]
