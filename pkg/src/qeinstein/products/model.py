"""Verdicts on model spaces: hyperbolic space forms, the circle and
compact Einstein manifolds."""

from dataclasses import dataclass
from typing import Any, Optional

import sympy

from qeinstein.algebra import scalar
from qeinstein.products.exception import (
    NoSolutionException,
    ParameterException,
)
from qeinstein.products.factor import ProductVerdict
from qeinstein.products.product import restrict_to_cell
from qeinstein.solver.problem import Verdict
from qeinstein.util import log


def _check_m(m: Any) -> Any:
    if scalar.is_zero(m):
        raise ParameterException('m must be nonzero')

    return scalar.as_scalar(m)


def space_form_verdict(rho: Any, m: Any, A: Optional[Any] = None
                       ) -> ProductVerdict:
    """Solve `ric_X^m = A g` on hyperbolic space with `Ric = -rho g`.

    The equation reads `L_X g / 2 - X* (x) X* / m = (A + rho) g`. With
    `A + rho = 0` the field vanishes, otherwise geodesic transport rules
    out every field.

    Args:
        rho (`Any`): The positive curvature scale.
        m (`Any`): The nonzero parameter.
        A (`Any`, optional): The Einstein constant to query. Defaults to
            None, which asks for every solution.

    Raises:
        ParameterException: If `m` is zero or `rho` is not positive.

    Returns:
        `ProductVerdict`: Trivial with `A = -rho`, or None for a queried
            `A != -rho`.
    """

    m = _check_m(m)
    rho = scalar.as_scalar(rho)

    if not rho > 0:
        raise ParameterException(f'rho must be positive, got {rho}')

    trivial = ProductVerdict(Verdict.TRIVIAL_ONLY, -rho, reasoning=(
        'A + rho = 0: phi vanishes identically, so X = 0',
    ))

    if A is None:
        return trivial

    lam = scalar.as_scalar(A) + rho

    if lam == 0:
        return trivial

    if lam * m > 0:
        return ProductVerdict(Verdict.NONE, reasoning=(
            f'(A + rho) m = {lam * m} > 0: phi escapes in finite time',
        ))

    return ProductVerdict(Verdict.NONE, reasoning=(
        f'(A + rho) m = {lam * m} < 0: |X| is constant and div X = '
        '(A + rho)(n - 1) cannot vanish for n = 3',
    ))


def space_form_cell(rho: Any, sign_m: int, sign_A: int) -> ProductVerdict:
    """Decide the sign cell `(sign m, sign A)` of hyperbolic space."""

    if sign_m not in (-1, 1) or sign_A not in (-1, 0, 1):
        raise ParameterException(f'bad sign cell ({sign_m}, {sign_A})')

    return restrict_to_cell(space_form_verdict(rho, sign_m), sign_A)


@dataclass(frozen=True)
class CircleSolution:
    """The field `X = coefficient d/dtheta` on the circle.

    Attributes:
        lam (`Any`): The constant of `L_X g / 2 - X* (x) X* / m = lam g`.
        m (`Any`): The parameter.
        coefficient (`Any`): `sqrt(-lam m)`.
        residual (`float`): `|-coefficient^2 / m - lam|`.
    """

    lam: Any
    m: Any
    coefficient: Any
    residual: float

    def describe(self) -> str:
        if self.coefficient == 0:
            return 'X = 0'

        return f'X = {self.coefficient} d/dtheta'


def circle_solution(lam: Any, m: Any) -> CircleSolution:
    """Get the constant field solving the equation on the unit circle.

    The circle is flat and every constant field is Killing, so only the
    dual square contributes and `coefficient^2 = -lam m`.

    Args:
        lam (`Any`): The constant of the equation.
        m (`Any`): The nonzero parameter.

    Raises:
        ParameterException: If `m` is zero.
        NoSolutionException: If `lam m > 0`.

    Returns:
        `CircleSolution`: The solution, `X = 0` when `lam = 0`.
    """

    m = _check_m(m)
    lam = scalar.as_scalar(lam)

    if lam * m > 0:
        raise NoSolutionException(
            f'lambda m = {lam * m} > 0 has no solution on the circle')

    coefficient = scalar.sqrt(-lam * m)
    square = scalar.to_sympy(coefficient) ** 2
    residual = abs(float(-square / scalar.to_sympy(m) - scalar.to_sympy(lam)))

    return CircleSolution(lam, m, coefficient, residual)


def compact_constant_norm_dichotomy(dim: int, lam: Any, m: Any,
                                    compact: bool = True) -> ProductVerdict:
    """Decide `L_X g / 2 - X* (x) X* / m = lam g` on a compact manifold.

    With `lam m < 0` the norm of a nonzero `X` is constant,
    `|X|^2 = -lam m`, and the trace of the equation gives
    `div X = lam (n - 1)`, which integrates to zero only for `n = 1`.

    Args:
        dim (`int`): The dimension `n`.
        lam (`Any`): The constant of the equation.
        m (`Any`): The nonzero parameter.
        compact (`bool`, optional): Whether the manifold is compact.
            Defaults to True.

    Raises:
        ParameterException: If `compact` is False, `dim` is not positive
            or `m` is zero.

    Returns:
        `ProductVerdict`: Exists on the circle, Trivial for `lam = 0` and
            None otherwise. `A` carries `lam`.
    """

    if not compact:
        raise ParameterException('the dichotomy needs a compact manifold')

    if dim < 1:
        raise ParameterException(f'dim must be positive, got {dim}')

    m = _check_m(m)
    lam = scalar.as_scalar(lam)

    if lam == 0:
        return ProductVerdict(Verdict.TRIVIAL_ONLY, lam, reasoning=(
            'lambda = 0: phi vanishes along every geodesic, so X = 0',
        ))

    if lam * m > 0:
        return ProductVerdict(Verdict.NONE, reasoning=(
            'lambda m > 0: phi escapes in finite time',
        ))

    n, divergence, norm_squared = sympy.symbols('n div norm2')
    lam_value, m_value = scalar.to_sympy(lam), scalar.to_sympy(m)
    trace = sympy.Eq(divergence - norm_squared / m_value, n * lam_value)
    forced = sympy.solve(trace.subs(norm_squared, -lam_value * m_value),
                         divergence)[0]
    reasoning = (
        'lambda m < 0: |X|^2 = -lambda m is constant',
        f'trace: div X = {sympy.sstr(sympy.factor(forced))}',
    )

    # div X integrates to zero on a compact manifold
    if sympy.simplify(forced.subs(n, dim)) != 0:
        return ProductVerdict(Verdict.NONE, reasoning=reasoning + (
            f'div X cannot vanish for n = {dim}, n must be 1',
        ))

    solution = circle_solution(lam, m)

    log.debug('Circle solution', {'lambda': str(lam), 'm': str(m)})

    return ProductVerdict(
        Verdict.EXISTS, lam,
        field=solution.describe(),
        coefficient=solution.coefficient,
        reasoning=reasoning + ('n = 1: the manifold is the circle',),
    )


def compact_einstein_verdict(dim: int, rho: Any, m: Any) -> ProductVerdict:
    """Decide whether a compact Einstein manifold with `Ric = rho g` is
    nontrivially m-quasi Einstein.

    Raises:
        ParameterException: If `m` is zero or `dim` is not positive.

    Returns:
        `ProductVerdict`: Exists only on the circle, where every `A` with
            `A m < 0` occurs, otherwise Trivial with `A = rho`.
    """

    m = _check_m(m)
    rho = scalar.as_scalar(rho)

    if dim < 1:
        raise ParameterException(f'dim must be positive, got {dim}')

    if dim == 1:
        if rho != 0:
            raise ParameterException('the circle has rho = 0')

        return ProductVerdict(
            Verdict.EXISTS,
            field='X = sqrt(-A m) d/dtheta for every A with A m < 0',
            reasoning=('the circle is flat and constant fields are Killing',),
        )

    return ProductVerdict(Verdict.TRIVIAL_ONLY, rho, reasoning=(
        f'n = {dim} > 1: a nonzero X forces n = 1',
        'X = 0 leaves Ric = rho g',
    ))
