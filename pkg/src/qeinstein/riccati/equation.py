"""Global solutions of the scalar Riccati equation `f' - f^2 / m = lambda`.

The equation has a solution on the whole line only when `lambda = 0`
(`f = 0`) or `lambda m < 0`, in which case the solutions are the two
constants `+-s` and the bounded branch `-s tanh(s (t + C) / m)`, with
`s = sqrt(-lambda m)`. Every other initial value escapes in finite time.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional

import sympy

from qeinstein.riccati.exception import (
    NoGlobalSolutionException,
    ParameterException,
)
from qeinstein.util import config


# Symbol used by the closed forms
t_symbol = sympy.Symbol('t', real=True)


@dataclass(frozen=True)
class RiccatiProblem:
    """The equation `f' - f^2 / m = lam`, with `f(0) = f0` when given."""

    lam: float
    m: float
    f0: Optional[float] = None

    def __post_init__(self):
        for name in ('lam', 'm', 'f0'):
            value = getattr(self, name)

            if value is None:
                continue

            value = float(value)

            if not math.isfinite(value):
                raise ParameterException(f'{name} must be finite')

            object.__setattr__(self, name, value)

        if self.m == 0:
            raise ParameterException('m must be nonzero')

    @property
    def product(self) -> float:
        """`float`: `lam * m`, whose sign decides the solution type."""

        return self.lam * self.m

    @property
    def speed(self) -> float:
        """`float`: `sqrt(|lam m|)`."""

        return math.sqrt(abs(self.product))

    def with_initial_value(self, f0: float) -> 'RiccatiProblem':
        """Get the same equation through `f(0) = f0`."""

        return RiccatiProblem(self.lam, self.m, f0)

    def rhs(self, value: float) -> float:
        """Get `f' = lam + f^2 / m` at `f = value`."""

        return self.lam + value * value / self.m


class RiccatiKind(Enum):
    """The type of a global solution."""

    IDENTICALLY_ZERO = 'identically zero'
    CONSTANT_PLUS = 'constant +sqrt(-lambda m)'
    CONSTANT_MINUS = 'constant -sqrt(-lambda m)'
    TANH_BRANCH = 'tanh branch'
    BRANCH_FAMILY = 'constants and tanh branches'
    NO_GLOBAL_SOLUTION = 'no global solutions'


@dataclass(frozen=True)
class RiccatiClassification:
    """The global solution type of a problem.

    Attributes:
        kind (`RiccatiKind`): The type.
        problem (`RiccatiProblem`): The classified problem.
        shift (`float`, optional): The constant `C` of the tanh branch.
        blow_up (`float`, optional): The escape time of the solution
            through `f0` when it is not global.
    """

    kind: RiccatiKind
    problem: RiccatiProblem
    shift: Optional[float] = None
    blow_up: Optional[float] = None

    @property
    def is_global(self) -> bool:
        """`bool`: Whether a solution on the whole line exists."""

        return self.kind != RiccatiKind.NO_GLOBAL_SOLUTION

    def describe(self) -> str:
        """Get a one line description."""

        problem = self.problem
        text = self.kind.value

        if self.kind == RiccatiKind.TANH_BRANCH:
            text += (f': f(t) = -{problem.speed:.12g} tanh('
                     f'{problem.speed / problem.m:.12g} (t + '
                     f'{self.shift:.12g}))')

        elif self.kind in (RiccatiKind.CONSTANT_PLUS,
                           RiccatiKind.CONSTANT_MINUS):
            sign = 1 if self.kind == RiccatiKind.CONSTANT_PLUS else -1
            text += f': f(t) = {sign * problem.speed:.12g}'

        elif self.blow_up is not None:
            text += f', the solution through f0 escapes at t = ' \
                f'{self.blow_up:.12g}'

        return text


def _matches(value: float, target: float) -> bool:
    tolerance = config.tolerance('solution')

    return abs(value - target) <= tolerance * max(1.0, abs(target))


def blow_up_time(problem: RiccatiProblem) -> Optional[float]:
    """Get the escape time of the solution through `f(0) = f0`.

    For `lam m > 0` the time returned is the first pole forward in time.

    Args:
        problem (`RiccatiProblem`): A problem with `f0`.

    Raises:
        ParameterException: If `f0` is not set.

    Returns:
        `float` | `None`: The pole of the solution, None if it is global.
    """

    if problem.f0 is None:
        raise ParameterException('f0 must be set to find a blow up time')

    lam, m, f0 = problem.lam, problem.m, problem.f0

    if lam == 0:
        if f0 == 0:
            return None

        return m / f0

    s = problem.speed

    if problem.product < 0:
        if abs(f0) <= s or _matches(abs(f0), s):
            return None

        # -s coth(s (t + C) / m) has its pole at t = -C
        return -(m / s) * math.atanh(-s / f0)

    # s tan(w t + theta) with w = lam / s
    omega = lam / s
    theta = math.atan(f0 / s)

    if omega > 0:
        return (math.pi / 2 - theta) / omega

    return (-math.pi / 2 - theta) / omega


def classify_global(problem: RiccatiProblem) -> RiccatiClassification:
    """Classify the global solutions of `problem`.

    Args:
        problem (`RiccatiProblem`): The equation, optionally with `f0`.

    Raises:
        TypeError: If `problem` is not a `RiccatiProblem`.

    Returns:
        `RiccatiClassification`: The branch through `f0`, or without `f0`
            the family of global solutions.
    """

    if not isinstance(problem, RiccatiProblem):
        raise TypeError('problem must be of type RiccatiProblem')

    f0 = problem.f0

    if problem.lam == 0:
        if f0 is None or f0 == 0:
            return RiccatiClassification(RiccatiKind.IDENTICALLY_ZERO,
                                         problem)

        return RiccatiClassification(RiccatiKind.NO_GLOBAL_SOLUTION,
                                     problem, blow_up=blow_up_time(problem))

    if problem.product > 0:
        blow_up = None if f0 is None else blow_up_time(problem)

        return RiccatiClassification(RiccatiKind.NO_GLOBAL_SOLUTION,
                                     problem, blow_up=blow_up)

    if f0 is None:
        return RiccatiClassification(RiccatiKind.BRANCH_FAMILY, problem)

    s = problem.speed

    if _matches(f0, s):
        return RiccatiClassification(RiccatiKind.CONSTANT_PLUS, problem)

    if _matches(f0, -s):
        return RiccatiClassification(RiccatiKind.CONSTANT_MINUS, problem)

    if abs(f0) < s:
        shift = (problem.m / s) * math.atanh(-f0 / s)

        return RiccatiClassification(RiccatiKind.TANH_BRANCH, problem,
                                     shift=shift)

    return RiccatiClassification(RiccatiKind.NO_GLOBAL_SOLUTION, problem,
                                 blow_up=blow_up_time(problem))


def closed_form_expression(problem: RiccatiProblem) -> sympy.Expr:
    """Get the solution through `f(0) = f0` as an expression in `t`.

    The expression is valid up to the first pole when the solution is not
    global.

    Args:
        problem (`RiccatiProblem`): A problem with `f0`.

    Raises:
        ParameterException: If `f0` is not set.

    Returns:
        `sympy.Expr`: The solution in `t_symbol`.
    """

    if problem.f0 is None:
        raise ParameterException('f0 must be set for a closed form')

    t = t_symbol
    lam, m, f0 = (sympy.Float(value, 30)
                  for value in (problem.lam, problem.m, problem.f0))

    if problem.lam == 0:
        return m * f0 / (m - f0 * t)

    s = sympy.sqrt(abs(lam * m))

    if problem.product > 0:
        return s * sympy.tan(lam / s * t + sympy.atan(f0 / s))

    if _matches(problem.f0, problem.speed):
        return s

    if _matches(problem.f0, -problem.speed):
        return -s

    if abs(problem.f0) < problem.speed:
        return -s * sympy.tanh(s / m * t + sympy.atanh(-f0 / s))

    return -s * sympy.coth(s / m * t + sympy.atanh(-s / f0))


def evaluate_closed_form(classification: RiccatiClassification,
                         t: float) -> float:
    """Evaluate a global branch at `t`.

    Args:
        classification (`RiccatiClassification`): A global branch.
        t (`float`): The time.

    Raises:
        NoGlobalSolutionException: If there is no global solution.
        ParameterException: If the classification is a family without a
            chosen branch.

    Returns:
        `float`: `f(t)`.
    """

    kind, problem = classification.kind, classification.problem

    if kind == RiccatiKind.NO_GLOBAL_SOLUTION:
        raise NoGlobalSolutionException(
            f'no global solution for lambda={problem.lam}, m={problem.m}'
        )

    if kind == RiccatiKind.BRANCH_FAMILY:
        raise ParameterException('a branch family has no single value, '
                                 'classify with f0 set')

    s = problem.speed

    if kind == RiccatiKind.IDENTICALLY_ZERO:
        return 0.0

    if kind == RiccatiKind.CONSTANT_PLUS:
        return s

    if kind == RiccatiKind.CONSTANT_MINUS:
        return -s

    return -s * math.tanh(s / problem.m * (t + classification.shift))


def ode_residual(problem: RiccatiProblem, times: Iterable[float]
                 ) -> List[float]:
    """Get `|f' - f^2 / m - lam|` of the closed form at `times`.

    The derivative is taken symbolically.

    Args:
        problem (`RiccatiProblem`): A problem with `f0`.
        times (`Iterable[float]`): Points inside the domain of the
            solution.

    Returns:
        `List[float]`: The residual at each point.
    """

    expression = closed_form_expression(problem)
    residual = (sympy.diff(expression, t_symbol) - expression ** 2
                / sympy.Float(problem.m, 30) - sympy.Float(problem.lam, 30))
    evaluate = sympy.lambdify(t_symbol, residual, modules='mpmath')

    return [abs(float(evaluate(time))) for time in times]
