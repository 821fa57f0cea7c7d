"""Markdown, JSON and CSV renderings of a classification table."""

import csv
import io
import json
from typing import Optional

from qeinstein.solver import sign_label
from qeinstein.table.build import ClassificationTable, TableDiff
from qeinstein.table.reference import CELL_ORDER, GEOMETRY_ORDER, \
    REFERENCE_TABLE


def _column_title(sign_m: int, sign_A: int) -> str:
    return f'm{sign_label(sign_m)} A{sign_label(sign_A)}'


def render_markdown(table: ClassificationTable,
                    table_diff: Optional[TableDiff] = None) -> str:
    """Render the table as a Markdown grid.

    Cells differing from the reference are marked with `*`, disputed ones
    with `(disputed)`, and the mismatches are listed below the grid.
    """

    mismatched = {}

    if table_diff is not None:
        mismatched = {(mismatch.group, mismatch.sign_m, mismatch.sign_A):
                      mismatch for mismatch in table_diff.mismatches}

    titles = [_column_title(*cell) for cell in CELL_ORDER]
    lines = [
        '| Geometry | ' + ' | '.join(titles) + ' |',
        '|---' * (len(titles) + 1) + '|',
    ]

    for group in GEOMETRY_ORDER:
        entries = []

        for cell in table.row(group):
            text = cell.verdict.value
            mismatch = mismatched.get((cell.group, cell.sign_m, cell.sign_A))

            if mismatch is not None:
                text += ' (disputed)' if mismatch.disputed else ' *'

            entries.append(text)

        lines.append(f'| {group.display_name} | ' + ' | '.join(entries)
                     + ' |')

    if table_diff is not None:
        lines.append('')

        if len(table_diff.mismatches) == 0:
            lines.append('All cells match the reference table.')

        else:
            lines.append('Mismatches:')
            lines.append('')

            for mismatch in table_diff.mismatches:
                lines.append(f'- {mismatch.describe()}')
                note = REFERENCE_TABLE[(mismatch.group, mismatch.sign_m,
                                        mismatch.sign_A)].note

                if note:
                    lines.append(f'  - {note}')

    return '\n'.join(lines) + '\n'


def render_json(table: ClassificationTable,
                table_diff: Optional[TableDiff] = None,
                certify: bool = False) -> str:
    """Render every cell, and the diff when given, as indented JSON."""

    data = {'cells': [cell.to_json(certify) for cell in table]}

    if table_diff is not None:
        data['diff'] = table_diff.to_json()

    return json.dumps(data, indent=2) + '\n'


def render_csv(table: ClassificationTable) -> str:
    """Render one `group,sign_m,sign_A,verdict,expected,disputed` row per
    cell."""

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(('group', 'sign_m', 'sign_A', 'verdict', 'expected',
                     'disputed'))

    for cell in table:
        reference = REFERENCE_TABLE[(cell.group, cell.sign_m, cell.sign_A)]
        writer.writerow((cell.group.value, cell.sign_m, cell.sign_A,
                         cell.verdict.value, reference.verdict.value,
                         str(reference.disputed).lower()))

    return buffer.getvalue()
