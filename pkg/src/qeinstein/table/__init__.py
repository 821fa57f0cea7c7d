"""Provides the classification table of the nine model geometries."""

from qeinstein.table.reference import (
    CELL_ORDER,
    GEOMETRY_ORDER,
    REFERENCE_TABLE,
    ReferenceCell,
)
from qeinstein.table.build import (
    ClassificationTable,
    Mismatch,
    TableCell,
    TableDiff,
    build_table,
    compute_cell,
    diff,
)
from qeinstein.table.render import render_csv, render_json, render_markdown


__all__ = [
    'CELL_ORDER',
    'GEOMETRY_ORDER',
    'REFERENCE_TABLE',
    'ReferenceCell',
    'ClassificationTable',
    'Mismatch',
    'TableCell',
    'TableDiff',
    'build_table',
    'compute_cell',
    'diff',
    'render_csv',
    'render_json',
    'render_markdown',
]
