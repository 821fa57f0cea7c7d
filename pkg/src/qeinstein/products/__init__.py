"""Provides the m-quasi Einstein verdicts on Einstein products and model
spaces."""

from qeinstein.products.factor import EinsteinFactor, ProductVerdict
from qeinstein.products.model import (
    CircleSolution,
    circle_solution,
    compact_constant_norm_dichotomy,
    compact_einstein_verdict,
    space_form_cell,
    space_form_verdict,
)
from qeinstein.products.product import (
    ProductTensors,
    assemble_product_tensors,
    product_cell,
    product_qe,
    restrict_to_cell,
)


__all__ = [
    'EinsteinFactor',
    'ProductVerdict',
    'CircleSolution',
    'circle_solution',
    'compact_constant_norm_dichotomy',
    'compact_einstein_verdict',
    'space_form_cell',
    'space_form_verdict',
    'ProductTensors',
    'assemble_product_tensors',
    'product_cell',
    'product_qe',
    'restrict_to_cell',
]
