import unittest
from fractions import Fraction

import numpy as np

from qeinstein.algebra import (
    H2xRFrame,
    LeftInvariantField,
    MilnorFrame,
    StructureConstants,
    ad_matrix,
    classify_group_from_signs,
    h2xr_structure,
    jacobi_residual,
    milnor_to_structure,
    scalar,
    structure_from_lambda_star,
)
from qeinstein.algebra.exception import (
    InvalidSignPatternException,
    JacobiIdentityException,
    NotUnimodularException,
)
from qeinstein.algebra.geometry import SIGN_PATTERNS, Geometry


class GeometryTest(unittest.TestCase):
    """Unittest the qeinstein.algebra.geometry module."""

    def test_from_name(self):
        """Test Geometry.from_name is case and space insensitive."""

        self.assertEqual(Geometry.from_name(' SU2 '), Geometry.SU2)

    def test_from_name_unknown(self):
        """Test Geometry.from_name, passing an unknown name."""

        with self.assertRaises(ValueError):
            Geometry.from_name('sol')

    def test_from_name_type(self):
        """Test Geometry.from_name, passing a non string."""

        with self.assertRaises(TypeError):
            Geometry.from_name(3)

    def test_lie_groups(self):
        """Test the model spaces are not Lie group presentations."""

        self.assertFalse(Geometry.H3.is_lie_group)
        self.assertFalse(Geometry.S2XR.is_lie_group)
        self.assertTrue(Geometry.H2XR.is_lie_group)
        self.assertFalse(Geometry.H2XR.is_unimodular)
        self.assertTrue(Geometry.NIL.is_unimodular)


class StructureConstantsTest(unittest.TestCase):
    """Unittest qeinstein.algebra.structure.StructureConstants."""

    def test_exact_path(self):
        """Test integer input stays exact."""

        sc = structure_from_lambda_star((1, 1, -1))

        self.assertTrue(sc.exact)
        self.assertEqual(sc.c[0, 1, 2], Fraction(1))
        self.assertEqual(sc.c[0, 2, 1], Fraction(-1))
        self.assertEqual(sc.c[2, 0, 1], Fraction(-1))

    def test_float_path(self):
        """Test float input switches to float64."""

        sc = structure_from_lambda_star((1.5, 1, -1))

        self.assertFalse(sc.exact)
        self.assertEqual(sc.c.dtype, np.float64)

    def test_read_only(self):
        """Test the coefficient array cannot be written."""

        sc = structure_from_lambda_star((1, 0, 0))

        with self.assertRaises(ValueError):
            sc.c[0, 1, 2] = 5

    def test_shape(self):
        """Test a wrongly shaped input is rejected."""

        with self.assertRaises(ValueError):
            StructureConstants([[0, 1], [1, 0]])

    def test_antisymmetry(self):
        """Test a symmetric bracket is rejected."""

        c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
        c[0][1][2] = 1
        c[0][2][1] = 1

        with self.assertRaises(JacobiIdentityException):
            StructureConstants(c)

    def test_jacobi(self):
        """Test every Milnor triple satisfies the Jacobi identity."""

        for triple in ((1, 1, 1), (1, 1, -1), (2, -3, 0), (1, 0, 0)):
            with self.subTest(triple=triple):
                sc = structure_from_lambda_star(triple)

                self.assertEqual(jacobi_residual(sc), 0)
                self.assertTrue(sc.is_unimodular())

    def test_h2xr_not_unimodular(self):
        """Test the H^2xR bracket is a Lie algebra with trace."""

        sc = h2xr_structure()

        self.assertEqual(jacobi_residual(sc), 0)
        self.assertFalse(sc.is_unimodular())

    def test_bracket(self):
        """Test [e_2, e_3] = l1* e_1 in a Milnor frame."""

        sc = structure_from_lambda_star((2, 3, 5))

        self.assertEqual(list(sc.bracket((0, 1, 0), (0, 0, 1))), [2, 0, 0])
        self.assertEqual(list(sc.bracket((1, 0, 0), (0, 1, 0))), [0, 0, 5])

    def test_scaled(self):
        """Test scaling multiplies every coefficient."""

        sc = structure_from_lambda_star((1, 1, 1)).scaled(Fraction(1, 2))

        self.assertEqual(sc.c[1, 2, 0], Fraction(1, 2))


class LeftInvariantFieldTest(unittest.TestCase):
    """Unittest qeinstein.algebra.structure.LeftInvariantField."""

    def test_basis(self):
        """Test LeftInvariantField.basis."""

        field = LeftInvariantField.basis(2, 4)

        self.assertEqual(field.a, (0, 0, 4))
        self.assertEqual(field.support(), (2,))
        self.assertEqual(field.norm_squared(), 16)

    def test_basis_axis(self):
        """Test LeftInvariantField.basis, passing a bad axis."""

        with self.assertRaises(ValueError):
            LeftInvariantField.basis(3)

    def test_length(self):
        """Test a field needs three coefficients."""

        with self.assertRaises(ValueError):
            LeftInvariantField((1, 2))

    def test_support_tolerance(self):
        """Test tiny float coefficients are dropped with a tolerance."""

        field = LeftInvariantField((1e-14, 1.0, 0.0))

        self.assertEqual(field.support(1e-12), (1,))
        self.assertFalse(field.exact)

    def test_to_json(self):
        """Test integral fractions become ints in JSON."""

        self.assertEqual(LeftInvariantField((2, Fraction(1, 2), 0)).to_json(),
                         [2, 0.5, 0])


class AdMatrixTest(unittest.TestCase):
    """Unittest qeinstein.algebra.structure.ad_matrix."""

    def test_columns_are_brackets(self):
        """Test column i of ad_X is [X, e_i]."""

        sc = structure_from_lambda_star((2, -1, 3))
        X = LeftInvariantField((1, 2, 3))
        ad = ad_matrix(sc, X)

        for index in range(3):
            basis = [0, 0, 0]
            basis[index] = 1

            with self.subTest(index=index):
                self.assertEqual(list(ad.column(index)),
                                 list(sc.bracket(X.a, basis)))

    def test_unimodular_trace(self):
        """Test ad_X is trace free on a unimodular algebra."""

        sc = structure_from_lambda_star((1, 1, -1))

        self.assertEqual(ad_matrix(sc, LeftInvariantField((1, 2, 3))).trace(),
                         0)

    def test_types(self):
        """Test ad_matrix rejects bad argument types."""

        with self.assertRaises(TypeError):
            ad_matrix('sc', LeftInvariantField.zero())

        with self.assertRaises(TypeError):
            ad_matrix(h2xr_structure(), (1, 0, 0))


class MilnorFrameTest(unittest.TestCase):
    """Unittest qeinstein.algebra.milnor."""

    def test_canonical(self):
        """Test a canonical triple keeps its labels."""

        frame = MilnorFrame.create((2, 0, 0))

        self.assertEqual(frame.group, Geometry.NIL)
        self.assertEqual(frame.lambda_star, (2, 0, 0))
        self.assertEqual(frame.permutation, (0, 1, 2))
        self.assertEqual(frame.orientation, 1)

    def test_relabel(self):
        """Test a permuted Nil triple is relabelled."""

        frame = MilnorFrame.create((0, 0, 2))

        self.assertEqual(frame.group, Geometry.NIL)
        self.assertEqual(frame.lambda_star, (2, 0, 0))

    def test_orientation(self):
        """Test an all negative triple reverses the orientation."""

        frame = MilnorFrame.create((-1, -2, -3))

        self.assertEqual(frame.group, Geometry.SU2)
        self.assertEqual(frame.orientation, -1)
        self.assertEqual(frame.lambda_star, (1, 2, 3))

    def test_classify(self):
        """Test every sign pattern is recognised."""

        cases = {
            (1, 1, 1): Geometry.SU2,
            (2, 2, -2): Geometry.SL2R,
            (1, -1, 0): Geometry.E11,
            (1, 1, 0): Geometry.E2,
            (0, 0, 0): Geometry.R3,
            (0, 3, 0): Geometry.NIL,
        }

        for triple, group in cases.items():
            with self.subTest(triple=triple):
                self.assertEqual(classify_group_from_signs(triple).group,
                                 group)

    def test_expected_group(self):
        """Test MilnorFrame.create rejects another group's pattern."""

        with self.assertRaises(InvalidSignPatternException):
            MilnorFrame.create((1, 1, 1), 'nil')

    def test_not_a_triple(self):
        """Test MilnorFrame.create rejects a pair."""

        with self.assertRaises(NotUnimodularException):
            MilnorFrame.create((1, 2))

    def test_constructor_checks_order(self):
        """Test the constructor rejects a non canonical order."""

        with self.assertRaises(InvalidSignPatternException):
            MilnorFrame((0, 0, 1), Geometry.NIL)

    def test_no_milnor_frame(self):
        """Test H^3 has no Milnor frame."""

        with self.assertRaises(NotUnimodularException):
            MilnorFrame((1, 1, 1), Geometry.H3)

    def test_json(self):
        """Test MilnorFrame.to_json and from_json."""

        frame = MilnorFrame.create((Fraction(1, 2), 1, 1))

        self.assertEqual(frame.to_json(),
                         {'group': 'su2', 'lambda_star': [0.5, 1, 1]})
        self.assertEqual(MilnorFrame.from_json(
            '{"group": "nil", "lambda_star": [3, 0, 0]}').lambda_star,
            (3, 0, 0))

    def test_from_json_missing(self):
        """Test MilnorFrame.from_json, missing a key."""

        with self.assertRaises(ValueError):
            MilnorFrame.from_json({'group': 'nil'})

    def test_structure_round_trip_random(self):
        """Test the bracket of a random frame classifies back to its
        group."""

        rng = np.random.default_rng(0)
        groups = tuple(SIGN_PATTERNS)
        magnitudes = rng.uniform(0.01, 10.0, size=(10 ** 4, 3))

        for index, row in enumerate(magnitudes):
            group = groups[index % len(groups)]
            values = tuple(float(sign * value) for sign, value
                           in zip(SIGN_PATTERNS[group], row))

            with self.subTest(group=group, index=index):
                frame = MilnorFrame.create(values, group)
                c = milnor_to_structure(frame).c
                classification = classify_group_from_signs(
                    tuple(c[k, (k + 1) % 3, (k + 2) % 3] for k in range(3)))

                self.assertEqual(classification.group, group)
                self.assertEqual(classification.permutation, (0, 1, 2))
                self.assertEqual(classification.orientation, 1)


class H2xRFrameTest(unittest.TestCase):
    """Unittest qeinstein.algebra.structure.H2xRFrame."""

    def test_from_rho_square(self):
        """Test a rational square rho keeps the scale exact."""

        frame = H2xRFrame.from_rho(4)

        self.assertEqual(frame.scale, Fraction(2))
        self.assertEqual(frame.rho, 4)

    def test_from_rho_float(self):
        """Test a non square rho gives a float scale."""

        self.assertAlmostEqual(H2xRFrame.from_rho(2).scale, 2 ** 0.5)

    def test_positive(self):
        """Test the scale must be positive."""

        with self.assertRaises(ValueError):
            H2xRFrame(0)

        with self.assertRaises(ValueError):
            H2xRFrame.from_rho(-1)


class ScalarTest(unittest.TestCase):
    """Unittest qeinstein.algebra.scalar."""

    def test_as_scalars(self):
        """Test mixing a float switches every value to float."""

        self.assertEqual(scalar.as_scalars((1, Fraction(1, 2))),
                         (Fraction(1), Fraction(1, 2)))
        self.assertEqual(scalar.as_scalars((1, 0.5)), (1.0, 0.5))

    def test_not_finite(self):
        """Test infinite values are rejected."""

        with self.assertRaises(ValueError):
            scalar.as_scalars((1.0, float('inf')))

    def test_bool_is_not_exact(self):
        """Test booleans are not exact numbers."""

        self.assertFalse(scalar.is_exact_value(True))

    def test_sqrt(self):
        """Test rational squares stay exact."""

        self.assertEqual(scalar.sqrt(Fraction(9, 4)), Fraction(3, 2))
        self.assertEqual(scalar.sqrt(4.0), 2.0)
        self.assertAlmostEqual(float(scalar.sqrt(2)), 2 ** 0.5)

    def test_sign(self):
        """Test scalar.sign with a tolerance."""

        self.assertEqual(scalar.sign(Fraction(-1, 3)), -1)
        self.assertEqual(scalar.sign(1e-15, 1e-12), 0)

    def test_to_json_number(self):
        """Test scalar.to_json_number."""

        self.assertEqual(scalar.to_json_number(Fraction(4, 2)), 2)
        self.assertEqual(scalar.to_json_number(Fraction(1, 4)), 0.25)
