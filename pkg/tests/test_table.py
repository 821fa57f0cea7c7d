import json
import unittest
from fractions import Fraction

from qeinstein.algebra import structure_from_lambda_star
from qeinstein.algebra.geometry import Geometry
from qeinstein.curvature import ricci_tensor
from qeinstein.products import ProductVerdict
from qeinstein.run_config import RunConfig
from qeinstein.solver import Verdict
from qeinstein.table import (
    CELL_ORDER,
    GEOMETRY_ORDER,
    REFERENCE_TABLE,
    ClassificationTable,
    TableCell,
    build_table,
    compute_cell,
    diff,
    render_csv,
    render_json,
    render_markdown,
)


def _reference_table(overrides=None):
    """Get a table holding the reference verdicts, with `overrides`
    replacing single cells."""

    overrides = overrides or {}
    cells = {}

    for key, reference in REFERENCE_TABLE.items():
        verdict = overrides.get(key, reference.verdict)
        cells[key] = TableCell(*key, ProductVerdict(verdict))

    return ClassificationTable(cells)


class ReferenceTest(unittest.TestCase):
    """Unittest qeinstein.table.reference."""

    def test_shape(self):
        """Test nine geometries with six cells each."""

        self.assertEqual(len(REFERENCE_TABLE), 54)
        self.assertEqual(len(GEOMETRY_ORDER), 9)
        self.assertEqual(CELL_ORDER[0], (1, 1))
        self.assertEqual(CELL_ORDER[-1], (-1, -1))

    def test_rows(self):
        """Test the published rows."""

        letters = {'E': Verdict.EXISTS, 'T': Verdict.TRIVIAL_ONLY,
                   'N': Verdict.NONE}
        rows = {
            Geometry.R3: 'NTNNTN',
            Geometry.SU2: 'EEEENN',
            Geometry.SL2R: 'NNNNEN',
            Geometry.NIL: 'NNENNN',
            Geometry.E11: 'NNNNNN',
            Geometry.E2: 'NNNNNN',
            Geometry.H3: 'NNTNNT',
            Geometry.S2XR: 'NNNENN',
            Geometry.H2XR: 'NNENNN',
        }

        for group, row in rows.items():
            with self.subTest(group=group):
                self.assertEqual(
                    [REFERENCE_TABLE[(group, *cell)].verdict
                     for cell in CELL_ORDER],
                    [letters[letter] for letter in row])

    def test_disputed(self):
        """Test exactly the two SL2 cells are disputed."""

        disputed = sorted(key[1:] for key, cell in REFERENCE_TABLE.items()
                          if cell.disputed)

        self.assertEqual(disputed, [(-1, 0), (1, -1)])
        self.assertTrue(all(cell.note for cell in REFERENCE_TABLE.values()
                            if cell.disputed))


    def test_disputed_derivation(self):
        """Test the Ricci diagonal the disputed notes rely on."""

        for l1, l3 in ((2, 2), (1, 1), (Fraction(1, 3), 5),
                       (7, Fraction(1, 2))):
            with self.subTest(l1=l1, l3=l3):
                r1 = -l3 * (l1 + Fraction(l3) / 2)
                ric = ricci_tensor(structure_from_lambda_star((l1, l1, -l3)))

                self.assertEqual(ric.diagonal(),
                                 (r1, r1, Fraction(l3) ** 2 / 2))
                self.assertLess(r1, 0)

        for key in ((Geometry.SL2R, 1, -1), (Geometry.SL2R, -1, 0)):
            with self.subTest(cell=key):
                self.assertIn('-l3 (l1 + l3 / 2) < 0',
                              REFERENCE_TABLE[key].note)


class DiffTest(unittest.TestCase):
    """Unittest qeinstein.table.build.diff."""

    def test_match(self):
        """Test the reference itself matches with exit code 0."""

        table_diff = diff(_reference_table())

        self.assertEqual(table_diff.mismatches, ())
        self.assertEqual(table_diff.exit_code, 0)

    def test_disputed_only(self):
        """Test differing disputed cells give exit code 2."""

        table_diff = diff(_reference_table({
            (Geometry.SL2R, 1, -1): Verdict.EXISTS,
            (Geometry.SL2R, -1, 0): Verdict.NONE,
        }))

        self.assertEqual(len(table_diff.mismatches), 2)
        self.assertEqual(table_diff.exit_code, 2)

    def test_undisputed(self):
        """Test an undisputed difference gives exit code 1."""

        table_diff = diff(_reference_table({
            (Geometry.SL2R, 1, -1): Verdict.EXISTS,
            (Geometry.NIL, 1, -1): Verdict.NONE,
        }))

        self.assertEqual(table_diff.exit_code, 1)
        self.assertEqual(table_diff.to_json()['exit_code'], 1)
        self.assertEqual(table_diff.mismatches[-1].describe(),
                         'Nil m>0 A<0: expected Exists, computed None')


class ComputeCellTest(unittest.TestCase):
    """Unittest qeinstein.table.build.compute_cell."""

    def test_s2xr(self):
        """Test the S^2xR cell carries a product witness."""

        cell = compute_cell('s2xr', -1, 1)

        self.assertEqual(cell.verdict, Verdict.EXISTS)
        self.assertTrue(cell.has_witness)
        self.assertEqual(cell.witness['residual'], 0.0)
        self.assertEqual(cell.to_json()['witnesses'][0]['A'], 1)

    def test_h3(self):
        """Test the H^3 cells."""

        self.assertEqual(compute_cell(Geometry.H3, 1, -1).verdict,
                         Verdict.TRIVIAL_ONLY)
        self.assertEqual(compute_cell(Geometry.H3, -1, 0).verdict,
                         Verdict.NONE)

    def test_lie_group(self):
        """Test a Lie group cell goes through the solver."""

        cell = compute_cell(Geometry.NIL, 1, -1, witness_draws=2, seed=0)

        self.assertEqual(cell.verdict, Verdict.EXISTS)
        self.assertTrue(cell.has_witness)


class BuildTableTest(unittest.TestCase):
    """Unittest qeinstein.table.build.build_table."""

    def test_regenerate(self):
        """Test the regenerated table differs only in disputed cells."""

        table = build_table(RunConfig({'witness_draws': 2, 'seed': 0}))
        table_diff = diff(table)

        self.assertEqual(len(table), 54)
        self.assertEqual(table_diff.exit_code, 2)
        self.assertEqual(sorted((mismatch.sign_m, mismatch.sign_A)
                                for mismatch in table_diff.mismatches),
                         [(-1, 0), (1, -1)])

        for cell in table:
            if cell.verdict == Verdict.EXISTS:
                with self.subTest(cell=(cell.group, cell.sign_m,
                                        cell.sign_A)):
                    self.assertTrue(cell.has_witness)


class RenderTest(unittest.TestCase):
    """Unittest qeinstein.table.render."""

    def setUp(self):
        self.table = _reference_table({
            (Geometry.SL2R, 1, -1): Verdict.EXISTS,
            (Geometry.NIL, 1, -1): Verdict.NONE,
        })
        self.diff = diff(self.table)

    def test_markdown(self):
        """Test the Markdown grid marks mismatches."""

        lines = render_markdown(self.table, self.diff).splitlines()

        self.assertEqual(lines[0], '| Geometry | m>0 A>0 | m>0 A=0 | m>0 A<0 '
                                   '| m<0 A>0 | m<0 A=0 | m<0 A<0 |')
        self.assertEqual(lines[1], '|---|---|---|---|---|---|---|')
        self.assertEqual(lines[2], '| R^3 | None | Trivial | None | None '
                                   '| Trivial | None |')
        self.assertIn('| SL2(R)~ | None | None | Exists (disputed) |',
                      lines[4])
        self.assertIn('| Nil | None | None | None * |', lines[5])
        self.assertIn('Mismatches:', lines)

    def test_markdown_match(self):
        """Test a matching table says so."""

        text = render_markdown(_reference_table(), diff(_reference_table()))

        self.assertTrue(text.endswith(
            'All cells match the reference table.\n'))

    def test_json(self):
        """Test the JSON rendering holds every cell and the diff."""

        data = json.loads(render_json(self.table, self.diff))

        self.assertEqual(len(data['cells']), 54)
        self.assertEqual(data['cells'][0]['group'], 'r3')
        self.assertEqual(data['diff']['exit_code'], 1)

    def test_csv(self):
        """Test the CSV rendering has one row per cell."""

        lines = render_csv(self.table).splitlines()

        self.assertEqual(lines[0], 'group,sign_m,sign_A,verdict,expected,'
                                   'disputed')
        self.assertEqual(len(lines), 55)
        self.assertIn('sl2r,1,-1,Exists,None,true', lines)
        self.assertIn('nil,1,-1,None,Exists,false', lines)
