import unittest
from fractions import Fraction

import numpy as np
import sympy

from qeinstein.algebra import (
    MilnorFrame,
    StructureConstants,
    h2xr_structure,
    milnor_to_structure,
    structure_from_lambda_star,
)
from qeinstein.algebra.geometry import SIGN_PATTERNS, Geometry
from qeinstein.curvature import (
    H2Chart,
    SymTensor3,
    h2_chart_connection,
    is_attainable,
    levi_civita,
    principal_ricci_closed_form,
    ricci_signature,
    ricci_tensor,
    sectional_curvature,
)
from qeinstein.curvature.exception import FrameException


class SymTensor3Test(unittest.TestCase):
    """Unittest qeinstein.curvature.tensor.SymTensor3."""

    def test_entries(self):
        """Test a tensor needs six entries."""

        with self.assertRaises(ValueError):
            SymTensor3([1, 2, 3])

    def test_symmetric_access(self):
        """Test t[i, j] and t[j, i] read the same entry."""

        tensor = SymTensor3([1, 2, 3, 4, 5, 6])

        self.assertEqual(tensor[1, 0], 4)
        self.assertEqual(tensor[2, 1], 6)
        self.assertEqual(tensor.matrix()[2, 0], 5)

    def test_from_matrix(self):
        """Test a matrix is symmetrized on construction."""

        tensor = SymTensor3.from_matrix([[1, 2, 0], [0, 1, 0], [0, 0, 1]])

        self.assertEqual(tensor[0, 1], 1)

    def test_arithmetic(self):
        """Test sums, differences and scalar multiples."""

        left = SymTensor3.identity(2)
        right = SymTensor3.diagonal_of([1, 0, -1])

        self.assertEqual(left - right, SymTensor3([1, 2, 3, 0, 0, 0]))
        self.assertEqual(Fraction(1, 2) * left, SymTensor3.identity(1))
        self.assertEqual(-right, SymTensor3.diagonal_of([-1, 0, 1]))
        self.assertEqual((left + right).sup_norm(), 3)

    def test_is_diagonal(self):
        """Test SymTensor3.is_diagonal with a float tolerance."""

        self.assertTrue(SymTensor3([1.0, 1.0, 1.0, 1e-15, 0.0, 0.0])
                        .is_diagonal(1e-12))
        self.assertFalse(SymTensor3([1, 1, 1, 0, 0, 1]).is_diagonal())


class ConnectionTest(unittest.TestCase):
    """Unittest qeinstein.curvature.connection."""

    def test_metric_and_torsion_free(self):
        """Test the Koszul connection is metric and torsion free."""

        for sc in (structure_from_lambda_star((2, 3, -1)), h2xr_structure()):
            with self.subTest(sc=sc):
                connection = levi_civita(sc)

                self.assertEqual(connection.compatibility_residual(), 0)
                self.assertEqual(connection.torsion_residual(sc), 0)

    def test_metric_and_torsion_free_random(self):
        """Test the connection on rotated random frames."""

        rng = np.random.default_rng(0)
        worst = {'compatibility': 0.0, 'torsion': 0.0}

        for index in range(10 ** 4):
            if index % 10 == 0:
                c = h2xr_structure().c.astype(float) * rng.uniform(0.1, 3.0)

            else:
                c = structure_from_lambda_star(
                    tuple(float(value)
                          for value in rng.uniform(-3.0, 3.0, 3))).c

            q = np.linalg.qr(rng.normal(size=(3, 3)))[0]
            rotated = np.einsum('dk,ai,bj,dab->kij', q, q, q, c)
            sc = StructureConstants(
                (rotated - np.transpose(rotated, (0, 2, 1))) / 2)
            connection = levi_civita(sc)

            worst['compatibility'] = max(
                worst['compatibility'], connection.compatibility_residual())
            worst['torsion'] = max(worst['torsion'],
                                   connection.torsion_residual(sc))

        for name, residual in worst.items():
            with self.subTest(residual=name):
                self.assertLess(residual, 1e-12)

    def test_round_sphere(self):
        """Test l* = (1, 1, 1) has constant sectional curvature 1/4."""

        sc = structure_from_lambda_star((1, 1, 1))

        for i, j in ((0, 1), (0, 2), (1, 2)):
            with self.subTest(plane=(i, j)):
                self.assertEqual(sectional_curvature(sc, i, j),
                                 Fraction(1, 4))

    def test_sectional_plane(self):
        """Test a degenerate plane is rejected."""

        with self.assertRaises(ValueError):
            sectional_curvature(structure_from_lambda_star((1, 1, 1)), 1, 1)

    def test_levi_civita_type(self):
        """Test levi_civita rejects a plain array."""

        with self.assertRaises(TypeError):
            levi_civita([[[0] * 3] * 3] * 3)


class RicciTest(unittest.TestCase):
    """Unittest qeinstein.curvature.ricci."""

    def test_closed_form_agrees(self):
        """Test the frame Ricci tensor matches the closed form."""

        for triple in ((1, 1, 1), (2, 0, 0), (2, 2, -2), (2, -1, 0),
                       (3, 1, 2)):
            with self.subTest(triple=triple):
                ric = ricci_tensor(structure_from_lambda_star(triple))

                self.assertTrue(ric.is_diagonal())
                self.assertEqual(ric.diagonal(),
                                 principal_ricci_closed_form(triple))

    def test_signature_attainable_random(self):
        """Test random frames of each group have an attainable signature
        and the closed form curvatures."""

        rng = np.random.default_rng(0)

        for group, pattern in SIGN_PATTERNS.items():
            with self.subTest(group=group):
                for _ in range(1000):
                    signed = (np.array(pattern)
                              * rng.uniform(0.1, 3.0, 3)
                              * rng.choice((-1, 1)))
                    frame = MilnorFrame.create(
                        tuple(float(value)
                              for value in rng.permutation(signed)),
                        group)
                    ric = ricci_tensor(milnor_to_structure(frame))
                    expected = principal_ricci_closed_form(frame.lambda_star)
                    scale = 1 + max(abs(value) for value in expected)

                    self.assertTrue(is_attainable(group,
                                                  ricci_signature(ric)))
                    self.assertLess(max(abs(value - target) for value, target
                                        in zip(ric.diagonal(), expected)),
                                    1e-12 * scale)

    def test_nil(self):
        """Test the Nil curvatures l*^2 / 2 (1, -1, -1)."""

        self.assertEqual(principal_ricci_closed_form((2, 0, 0)), (2, -2, -2))

    def test_h2xr(self):
        """Test H^2xR has Ricci diag(-1, -1, 0)."""

        self.assertEqual(ricci_tensor(h2xr_structure()),
                         SymTensor3.diagonal_of([-1, -1, 0]))

    def test_symbolic(self):
        """Test symbolic structure constants give a symbolic tensor."""

        l1 = sympy.Symbol('l1', positive=True)
        ric = ricci_tensor(structure_from_lambda_star((l1, 0, 0),
                                                      validate=False))

        self.assertEqual(sympy.simplify(ric[0, 0] - l1 ** 2 / 2), 0)
        self.assertEqual(sympy.simplify(ric[1, 1] + l1 ** 2 / 2), 0)

    def test_signatures(self):
        """Test signatures of sample metrics."""

        cases = {
            (1, 1, 1): (1, 1, 1),
            (2, 0, 0): (1, -1, -1),
            (2, 1, 0): (1, -1, -1),
            (1, 1, 0): (0, 0, 0),
        }

        for triple, signs in cases.items():
            with self.subTest(triple=triple):
                signature = ricci_signature(
                    ricci_tensor(structure_from_lambda_star(triple)))

                self.assertEqual(signature.multiset, signs)

    def test_attainable(self):
        """Test signatures against the attainable rows."""

        flat = ricci_signature(SymTensor3.zero())
        nil = ricci_signature(SymTensor3.diagonal_of([2, -2, -2]))

        self.assertTrue(is_attainable(Geometry.E2, flat))
        self.assertFalse(is_attainable(Geometry.NIL, flat))
        self.assertTrue(is_attainable(Geometry.NIL, nil))
        self.assertEqual(nil.symbol(), '(+,-,-)')

    def test_float_threshold(self):
        """Test float noise is read as zero relative to the largest
        curvature."""

        signature = ricci_signature(SymTensor3.diagonal_of([1e-15, 1.0, -1.0]))

        self.assertEqual(signature.signs, (0, 1, -1))
        self.assertGreater(signature.threshold, 0)

    def test_not_diagonal(self):
        """Test a non diagonal Ricci tensor is rejected."""

        with self.assertRaises(FrameException):
            ricci_signature(SymTensor3([1, 1, 1, 1, 0, 0]))


class H2ChartTest(unittest.TestCase):
    """Unittest qeinstein.curvature.chart."""

    def test_connection(self):
        """Test the Christoffel symbols of dr^2 + e^(2r) dx^2."""

        connection = h2_chart_connection()
        r = sympy.Symbol('r', real=True)

        self.assertEqual(sympy.simplify(connection[('x', 'x')][0]
                                        + sympy.exp(2 * r)), 0)
        self.assertEqual(connection[('x', 'x')][1], 0)
        self.assertEqual(connection[('r', 'x')], (0, 1))
        self.assertEqual(connection[('r', 'r')], (0, 0))

    def test_ricci(self):
        """Test the hyperbolic plane has Ric = -g."""

        chart = H2Chart()

        self.assertEqual(sympy.simplify(chart.ricci() + chart.metric),
                         sympy.zeros(2, 2))

    def test_gradient_field(self):
        """Test X = -m d_r solves ric_X^m = (-1 - m) g."""

        chart = H2Chart()

        for m in (-2, 1, 2, 3):
            with self.subTest(m=m):
                self.assertEqual(chart.bakry_emery_residual(m),
                                 sympy.zeros(2, 2))

    def test_zero_m(self):
        """Test the chart tensor rejects m = 0."""

        with self.assertRaises(ValueError):
            H2Chart().bakry_emery(0)
