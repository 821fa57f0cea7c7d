import math
import unittest
from io import StringIO

import numpy as np

from qeinstein.riccati import (
    GeodesicTransport,
    RiccatiKind,
    RiccatiProblem,
    blow_up_time,
    classify_global,
    default_span,
    evaluate_closed_form,
    ode_residual,
    rk4_oracle,
    transport_verdict,
)
from qeinstein.riccati.exception import (
    NoGlobalSolutionException,
    ParameterException,
)


class RiccatiProblemTest(unittest.TestCase):
    """Unittest qeinstein.riccati.equation.RiccatiProblem."""

    def test_floats(self):
        """Test the parameters are stored as floats."""

        problem = RiccatiProblem(-1, 4, 1)

        self.assertIsInstance(problem.lam, float)
        self.assertEqual(problem.product, -4.0)
        self.assertEqual(problem.speed, 2.0)
        self.assertEqual(problem.rhs(2.0), 0.0)

    def test_zero_m(self):
        """Test m = 0 is rejected."""

        with self.assertRaises(ParameterException):
            RiccatiProblem(1, 0)

    def test_not_finite(self):
        """Test infinite parameters are rejected."""

        with self.assertRaises(ParameterException):
            RiccatiProblem(float('inf'), 1)

        with self.assertRaises(ParameterException):
            RiccatiProblem(1, 1, float('nan'))

    def test_with_initial_value(self):
        """Test RiccatiProblem.with_initial_value."""

        self.assertEqual(RiccatiProblem(1, 2).with_initial_value(3).f0, 3.0)


class ClassifyGlobalTest(unittest.TestCase):
    """Unittest qeinstein.riccati.equation.classify_global."""

    def test_kinds(self):
        """Test the branch of sample problems."""

        cases = (
            (RiccatiProblem(0, 1), RiccatiKind.IDENTICALLY_ZERO),
            (RiccatiProblem(0, 1, 0), RiccatiKind.IDENTICALLY_ZERO),
            (RiccatiProblem(0, 1, 1), RiccatiKind.NO_GLOBAL_SOLUTION),
            (RiccatiProblem(1, 1), RiccatiKind.NO_GLOBAL_SOLUTION),
            (RiccatiProblem(-1, -1, 0), RiccatiKind.NO_GLOBAL_SOLUTION),
            (RiccatiProblem(-1, 1), RiccatiKind.BRANCH_FAMILY),
            (RiccatiProblem(1, -1), RiccatiKind.BRANCH_FAMILY),
            (RiccatiProblem(-1, 1, 1), RiccatiKind.CONSTANT_PLUS),
            (RiccatiProblem(-1, 1, -1), RiccatiKind.CONSTANT_MINUS),
            (RiccatiProblem(-1, 1, 0.5), RiccatiKind.TANH_BRANCH),
            (RiccatiProblem(-1, 1, 2), RiccatiKind.NO_GLOBAL_SOLUTION),
        )

        for problem, kind in cases:
            with self.subTest(problem=problem):
                self.assertEqual(classify_global(problem).kind, kind)

    def test_describe(self):
        """Test the kinds read as in the classification table."""

        self.assertEqual(RiccatiKind.NO_GLOBAL_SOLUTION.value,
                         'no global solutions')
        self.assertEqual(RiccatiKind.TANH_BRANCH.value, 'tanh branch')
        self.assertFalse(classify_global(RiccatiProblem(1, 1)).is_global)

    def test_tanh_shift(self):
        """Test the tanh branch through f0 = 1/2."""

        classification = classify_global(RiccatiProblem(-1, 1, 0.5))

        self.assertAlmostEqual(classification.shift, math.atanh(-0.5))
        self.assertAlmostEqual(evaluate_closed_form(classification, 0), 0.5)
        self.assertAlmostEqual(evaluate_closed_form(classification, 2),
                               -math.tanh(2 + math.atanh(-0.5)))

    def test_constants(self):
        """Test the constant branches are +-sqrt(-lambda m)."""

        plus = classify_global(RiccatiProblem(-1, 4, 2))
        minus = classify_global(RiccatiProblem(-1, 4, -2))

        self.assertEqual(evaluate_closed_form(plus, 10), 2.0)
        self.assertEqual(evaluate_closed_form(minus, -10), -2.0)

    def test_type(self):
        """Test classify_global rejects other inputs."""

        with self.assertRaises(TypeError):
            classify_global((1, 1))

    def test_evaluate_no_solution(self):
        """Test evaluating a problem without a global branch."""

        with self.assertRaises(NoGlobalSolutionException):
            evaluate_closed_form(classify_global(RiccatiProblem(1, 1, 0)), 0)

    def test_evaluate_family(self):
        """Test evaluating a family without an initial value."""

        with self.assertRaises(ParameterException):
            evaluate_closed_form(classify_global(RiccatiProblem(-1, 1)), 0)


class BlowUpTest(unittest.TestCase):
    """Unittest qeinstein.riccati.equation.blow_up_time."""

    def test_times(self):
        """Test the pole of sample solutions."""

        cases = (
            (RiccatiProblem(0, 1, 0.5), 2.0),
            (RiccatiProblem(1, 1, 0), math.pi / 2),
            (RiccatiProblem(-1, 1, 2), -math.atanh(-0.5)),
        )

        for problem, time in cases:
            with self.subTest(problem=problem):
                self.assertAlmostEqual(blow_up_time(problem), time)

    def test_positive_product_random(self):
        """Test random lambda m > 0 problems have no global solution and
        RK4 escapes at the closed form pole."""

        rng = np.random.default_rng(0)

        for _ in range(100):
            lam, m = rng.uniform(0.5, 2.0, 2) * rng.choice((-1, 1))
            f0 = rng.uniform(-10.0, 10.0)
            problem = RiccatiProblem(lam, m, f0)

            with self.subTest(problem=problem):
                classification = classify_global(problem)
                pole = blow_up_time(problem)
                trajectory = rk4_oracle(problem)

                self.assertEqual(classification.kind,
                                 RiccatiKind.NO_GLOBAL_SOLUTION)
                self.assertGreater(pole, 0)
                self.assertAlmostEqual(classification.blow_up, pole)
                self.assertTrue(trajectory.blew_up)
                self.assertAlmostEqual(trajectory.blow_up_time, pole,
                                       delta=0.02)

    def test_global(self):
        """Test global solutions have no pole."""

        self.assertIsNone(blow_up_time(RiccatiProblem(0, 1, 0)))
        self.assertIsNone(blow_up_time(RiccatiProblem(-1, 1, 0.5)))

    def test_missing_f0(self):
        """Test blow_up_time needs an initial value."""

        with self.assertRaises(ParameterException):
            blow_up_time(RiccatiProblem(1, 1))

    def test_classification_carries_pole(self):
        """Test the classification reports the pole."""

        classification = classify_global(RiccatiProblem(0, 1, 0.5))

        self.assertAlmostEqual(classification.blow_up, 2.0)


class OdeResidualTest(unittest.TestCase):
    """Unittest qeinstein.riccati.equation.ode_residual."""

    def test_closed_forms(self):
        """Test the closed forms solve the equation."""

        cases = (
            (RiccatiProblem(-1, 1, 0.5), (0.0, 1.0, 3.0)),
            (RiccatiProblem(-1, 4, 2), (0.0, 5.0)),
            (RiccatiProblem(0, 1, 0.5), (0.0, 1.0, 1.5)),
            (RiccatiProblem(1, 1, 0), (0.0, 1.0)),
            (RiccatiProblem(-1, 1, 2), (0.0, 0.25)),
        )

        for problem, times in cases:
            with self.subTest(problem=problem):
                for residual in ode_residual(problem, times):
                    self.assertLess(residual, 1e-12)

    def test_closed_forms_random(self):
        """Test random global branches solve the equation at 1000 times
        in [-5, 5], and tan branches up to half their pole."""

        rng = np.random.default_rng(0)
        times = np.linspace(-5.0, 5.0, 1000)

        for index in range(30):
            lam, m = rng.uniform(0.2, 3.0, 2) * np.array([1, -1])
            lam, m = (lam, m) if index % 2 else (-lam, -m)
            s = math.sqrt(abs(lam * m))

            if index % 3 == 0:
                problem = RiccatiProblem(lam, m, s * rng.choice((-1, 1)))
                window = times

            elif index % 3 == 1:
                problem = RiccatiProblem(lam, m, s * rng.uniform(-0.9, 0.9))
                window = times

            else:
                problem = RiccatiProblem(-lam, m, rng.uniform(-2.0, 2.0))
                window = np.linspace(0.0, blow_up_time(problem) / 2, 1000)

            with self.subTest(problem=problem):
                self.assertLess(max(ode_residual(problem, window)), 1e-9)


class RK4OracleTest(unittest.TestCase):
    """Unittest qeinstein.riccati.oracle.rk4_oracle."""

    def test_blow_up(self):
        """Test f(0) = 1/2, lambda = 0, m = 1 escapes at t = 2."""

        trajectory = rk4_oracle(RiccatiProblem(0, 1, 0.5))

        self.assertTrue(trajectory.blew_up)
        self.assertAlmostEqual(trajectory.blow_up_time, 2.0, delta=0.01)

    def test_tanh_branch(self):
        """Test the integration follows -tanh(t) on both sides of 0."""

        trajectory = rk4_oracle(RiccatiProblem(-1, 1, 0), t_span=(-1, 2))

        self.assertFalse(trajectory.blew_up)
        self.assertAlmostEqual(trajectory.times[0], -1.0)
        self.assertAlmostEqual(trajectory.times[-1], 2.0)
        self.assertLess(np.abs(trajectory.values
                               + np.tanh(trajectory.times)).max(), 1e-8)

    def test_tanh_branch_random(self):
        """Test RK4 on [-5, 5] agrees with random tanh branches."""

        rng = np.random.default_rng(0)

        for index in range(100):
            lam, m = rng.uniform(0.2, 3.0, 2) * np.array([1, -1])
            lam, m = (lam, m) if index % 2 else (-lam, -m)
            problem = RiccatiProblem(
                lam, m, math.sqrt(abs(lam * m)) * rng.uniform(-0.9, 0.9))

            with self.subTest(problem=problem):
                classification = classify_global(problem)
                trajectory = rk4_oracle(problem, t_span=(-5, 5))
                error = max(abs(value
                                - evaluate_closed_form(classification, time))
                            for time, value in zip(trajectory.times[::10],
                                                   trajectory.values[::10]))

                self.assertEqual(classification.kind,
                                 RiccatiKind.TANH_BRANCH)
                self.assertFalse(trajectory.blew_up)
                self.assertLess(error, 1e-6)

    def test_default_span(self):
        """Test the default window reaches a pole past t = 5."""

        cases = (
            (RiccatiProblem(-1, 1, 0), (0.0, 5.0)),
            (RiccatiProblem(0, 1, -0.5), (0.0, 5.0)),
            (RiccatiProblem(0, 1, 0.5), (0.0, 5.0)),
            (RiccatiProblem(0, 1, 0.001), (0.0, 100.0)),
            (RiccatiProblem(0, 1, 0.1), (0.0, 12.5)),
        )

        for problem, span in cases:
            with self.subTest(problem=problem):
                start, end = default_span(problem)

                self.assertEqual(start, span[0])
                self.assertAlmostEqual(end, span[1])

    def test_late_blow_up(self):
        """Test the default window catches poles near t = 10.79 and
        t = 15.7."""

        cases = (
            (RiccatiProblem(0.039, 0.5, -1.09), 10.7),
            (RiccatiProblem(-0.069, -3, 0.48), 15.6),
        )

        for problem, after in cases:
            with self.subTest(problem=problem):
                trajectory = rk4_oracle(problem)

                self.assertGreater(blow_up_time(problem), after)
                self.assertTrue(trajectory.blew_up)
                self.assertAlmostEqual(trajectory.blow_up_time,
                                       blow_up_time(problem), delta=0.02)

    def test_to_csv(self):
        """Test Trajectory.to_csv writes a header and one row per
        sample."""

        trajectory = rk4_oracle(RiccatiProblem(-1, 1, 1), t_span=(0, 0.01),
                                step=0.005)
        stream = StringIO()
        trajectory.to_csv(stream)
        lines = stream.getvalue().splitlines()

        self.assertEqual(lines[0], 't,f')
        self.assertEqual(lines[1], '0,1')
        self.assertEqual(len(lines), 4)

    def test_parameters(self):
        """Test rk4_oracle rejects bad parameters."""

        with self.assertRaises(ParameterException):
            rk4_oracle(RiccatiProblem(1, 1))

        with self.assertRaises(ParameterException):
            rk4_oracle(RiccatiProblem(1, 1, 0), step=0)

        with self.assertRaises(ParameterException):
            rk4_oracle(RiccatiProblem(1, 1, 0), t_span=(1, 2))


class TransportTest(unittest.TestCase):
    """Unittest qeinstein.riccati.transport."""

    def test_verdicts(self):
        """Test the branches surviving along a geodesic."""

        constants = (RiccatiKind.CONSTANT_PLUS, RiccatiKind.CONSTANT_MINUS)
        cases = (
            ((1, 1, False, False), ()),
            ((-1, -1, True, False), ()),
            ((0, 1, True, True), (RiccatiKind.IDENTICALLY_ZERO,)),
            ((-1, 1, False, False), constants + (RiccatiKind.TANH_BRANCH,)),
            ((-1, 1, True, False), constants),
            ((1, -1, True, True), ()),
        )

        for arguments, allowed in cases:
            with self.subTest(arguments=arguments):
                verdict = transport_verdict(*arguments)

                self.assertEqual(verdict.allowed, allowed)
                self.assertEqual(verdict.is_empty, len(allowed) == 0)
                self.assertGreater(len(verdict.reasoning), 0)

    def test_zero_m(self):
        """Test transport_verdict rejects m = 0."""

        with self.assertRaises(ParameterException):
            transport_verdict(1, 0, False, False)

    def test_geodesic_transport(self):
        """Test phi through phi(0) = 0 is -tanh(t)."""

        transport = GeodesicTransport(-1, 1, 0)

        self.assertEqual(transport.classification.kind,
                         RiccatiKind.TANH_BRANCH)
        self.assertAlmostEqual(transport.phi(1.0), -math.tanh(1.0))
        self.assertLess(transport.finite_difference_residual(1.0), 1e-6)
