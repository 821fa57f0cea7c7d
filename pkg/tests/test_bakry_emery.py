import unittest
from fractions import Fraction

import numpy as np

from qeinstein.algebra import (
    LeftInvariantField,
    ad_matrix,
    h2xr_structure,
    structure_from_lambda_star,
)
from qeinstein.bakry_emery import (
    BakryEmeryInput,
    bakry_emery_tensor,
    is_killing,
    killing_identity_check,
    lie_derivative_metric,
    one_form_square,
    qe_residual,
    trace_q_ad,
)
from qeinstein.bakry_emery.exception import (
    ParameterException,
    PreconditionException,
)
from qeinstein.curvature import SymTensor3


class BakryEmeryTensorTest(unittest.TestCase):
    """Unittest qeinstein.bakry_emery.tensor."""

    def test_known_solutions(self):
        """Test the residual vanishes on solutions found by hand."""

        cases = (
            ('nil', structure_from_lambda_star((2, 0, 0)), (2, 0, 0), 1, -2),
            ('nil', structure_from_lambda_star((2, 0, 0)), (-2, 0, 0), 1, -2),
            ('sl2r', structure_from_lambda_star((2, 2, -2)), (0, 0, 4), 2,
             -6),
            ('h2xr', h2xr_structure(), (0, 0, 2), 4, -1),
            ('h2xr', h2xr_structure(), (-1, 0, 0), -1, 0),
        )

        for name, sc, a, m, A in cases:
            with self.subTest(group=name, X=a, m=m):
                residual = qe_residual(sc, LeftInvariantField(a), m, A)

                self.assertEqual(residual.sup_norm, 0)
                self.assertTrue(residual.is_solution())

    def test_wrong_constant(self):
        """Test a wrong Einstein constant leaves a residual."""

        residual = qe_residual(structure_from_lambda_star((2, 0, 0)),
                               LeftInvariantField((2, 0, 0)), 1, -1)

        self.assertEqual(residual.sup_norm, 1)
        self.assertFalse(residual.is_solution())

    def test_zero_field(self):
        """Test X = 0 reduces the tensor to the Ricci tensor."""

        sc = structure_from_lambda_star((1, 1, 1))
        tensor = bakry_emery_tensor(
            BakryEmeryInput.create(sc, LeftInvariantField.zero(), 3))

        self.assertEqual(tensor, SymTensor3.identity(Fraction(1, 2)))

    def test_lie_derivative(self):
        """Test L_X g of e3 on l* = (1, 2, 3)."""

        lie = lie_derivative_metric(structure_from_lambda_star((1, 2, 3)),
                                    LeftInvariantField.basis(2))

        self.assertEqual(lie[0, 1], -1)
        self.assertEqual(lie[0, 0], 0)
        self.assertEqual(lie[2, 2], 0)

    def test_one_form_square(self):
        """Test X* (x) X* is the outer product of the coefficients."""

        square = one_form_square(LeftInvariantField((1, 2, 0)))

        self.assertEqual(square, SymTensor3([1, 4, 0, 2, 0, 0]))

        with self.assertRaises(TypeError):
            one_form_square((1, 2, 0))

    def test_zero_m(self):
        """Test m = 0 is rejected."""

        with self.assertRaises(ParameterException):
            BakryEmeryInput.create(h2xr_structure(),
                                   LeftInvariantField.zero(), 0)

    def test_mismatched_ricci(self):
        """Test a supplied Ricci tensor is checked against the bracket."""

        with self.assertRaises(ParameterException):
            BakryEmeryInput.create(h2xr_structure(),
                                   LeftInvariantField.zero(), 1,
                                   SymTensor3.identity(1))

    def test_input_type(self):
        """Test bakry_emery_tensor rejects other inputs."""

        with self.assertRaises(TypeError):
            bakry_emery_tensor({'m': 1})


class KillingTest(unittest.TestCase):
    """Unittest qeinstein.bakry_emery.killing."""

    def test_is_killing(self):
        """Test is_killing on Killing and non Killing unit fields."""

        cases = (
            ((1, 1, 3), 2, True),
            ((1, 2, 3), 2, False),
            ((2, 0, 0), 0, True),
            ((2, 0, 0), 1, False),
            ((1, 1, 1), 1, True),
        )

        for triple, axis, expected in cases:
            with self.subTest(triple=triple, axis=axis):
                check = is_killing(structure_from_lambda_star(triple),
                                   LeftInvariantField.basis(axis))

                self.assertEqual(bool(check), expected)

    def test_is_killing_random(self):
        """Test is_killing against the vanishing of ad_X + ad_X^T and the
        Milnor frame criterion a_i (l_j - l_k) = 0."""

        rng = np.random.default_rng(0)

        for index in range(10 ** 4):
            if index % 2 == 0:
                triple = rng.uniform(-3.0, 3.0, 3)
                a = rng.uniform(-3.0, 3.0, 3)

            else:
                triple = rng.uniform(-3.0, 3.0, 3)[[0, 0, 1]]
                a = np.array([0.0, 0.0, rng.uniform(-3.0, 3.0)])

            sc = structure_from_lambda_star(tuple(float(value)
                                                  for value in triple))
            X = LeftInvariantField(tuple(float(value) for value in a))
            check = is_killing(sc, X)
            symmetric = np.abs(ad_matrix(sc, X).symmetrized()).max()
            milnor = max(abs(a[i] * (triple[(i + 1) % 3]
                                     - triple[(i + 2) % 3]))
                         for i in range(3))

            with self.subTest(index=index):
                self.assertEqual(bool(check), symmetric < 1e-12)
                self.assertEqual(bool(check), milnor < 1e-12)
                self.assertAlmostEqual(check.lie_residual, check.ad_residual,
                                       places=12)

                if index % 2 == 1:
                    self.assertTrue(check)

    def test_residuals(self):
        """Test the residuals of a non Killing field are reported."""

        check = is_killing(structure_from_lambda_star((1, 2, 3)),
                           LeftInvariantField.basis(2))

        self.assertEqual(check.lie_residual, 1)
        self.assertGreater(check.ad_residual, 0)

    def test_gradient_field_is_not_killing(self):
        """Test -e1 on H^2xR is not Killing."""

        self.assertFalse(is_killing(h2xr_structure(),
                                    LeftInvariantField((-1, 0, 0))))

    def test_identity_killing(self):
        """Test the identity vanishes on the Nil solution."""

        sc = structure_from_lambda_star((2, 0, 0))
        q = SymTensor3.diagonal_of([-4, 0, 0])
        identity = killing_identity_check(q, sc,
                                          LeftInvariantField((2, 0, 0)), 1)

        self.assertEqual(identity.value, 0)
        self.assertEqual(identity.defect, 0)
        self.assertEqual(identity.hypothesis_residual, 0)

    def test_identity_non_killing(self):
        """Test the identity detects the non Killing H^2xR solution."""

        q = SymTensor3.diagonal_of([1, 1, 0])
        identity = killing_identity_check(q, h2xr_structure(),
                                          LeftInvariantField((-1, 0, 0)), -1)

        self.assertEqual(identity.symmetric_term, 1)
        self.assertEqual(identity.projection_term, 0)
        self.assertEqual(identity.trace, -1)
        self.assertEqual(identity.value, 1)
        self.assertEqual(identity.defect, 0)

    def test_identity_precondition(self):
        """Test the identity rejects a form that does not match X."""

        with self.assertRaises(PreconditionException) as context:
            killing_identity_check(SymTensor3.identity(1),
                                   structure_from_lambda_star((2, 0, 0)),
                                   LeftInvariantField((2, 0, 0)), 1)

        self.assertGreater(context.exception.residual, 0)

    def test_identity_zero_m(self):
        """Test the identity rejects m = 0."""

        with self.assertRaises(ParameterException):
            killing_identity_check(SymTensor3.zero(), h2xr_structure(),
                                   LeftInvariantField.zero(), 0)

    def test_trace_type(self):
        """Test trace_q_ad rejects a plain matrix."""

        with self.assertRaises(TypeError):
            trace_q_ad([[1, 0, 0], [0, 1, 0], [0, 0, 1]], h2xr_structure(),
                       LeftInvariantField.zero())
