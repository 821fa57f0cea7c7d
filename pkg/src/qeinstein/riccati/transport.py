"""The transport function `phi(t) = g(X, gamma'(t))` along unit speed
geodesics, which satisfies `phi' = phi^2 / m + lambda` when
`L_X g / 2 - X* (x) X* / m = lambda g`."""

from dataclasses import dataclass, field
from typing import Tuple

from qeinstein.riccati.equation import (
    RiccatiClassification,
    RiccatiKind,
    RiccatiProblem,
    classify_global,
    closed_form_expression,
    t_symbol,
)
from qeinstein.riccati.exception import ParameterException


@dataclass(frozen=True)
class GeodesicTransport:
    """The transport function through `phi(0) = phi0`."""

    lam: float
    m: float
    phi0: float
    problem: RiccatiProblem = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'problem',
                           RiccatiProblem(self.lam, self.m, self.phi0))

    @property
    def classification(self) -> RiccatiClassification:
        """`RiccatiClassification`: The branch of `phi`."""

        return classify_global(self.problem)

    def phi(self, t: float) -> float:
        """Evaluate `phi(t)`, valid before the first pole."""

        expression = closed_form_expression(self.problem)

        return float(expression.subs(t_symbol, t))

    def finite_difference_residual(self, t: float, h: float = 1e-5
                                   ) -> float:
        """Get `|phi'(t) - phi(t)^2 / m - lam|` with a central difference.

        Args:
            t (`float`): The time, at least `h` away from any pole.
            h (`float`, optional): The difference step. Defaults to 1e-5.

        Returns:
            `float`: The residual.
        """

        derivative = (self.phi(t + h) - self.phi(t - h)) / (2 * h)
        value = self.phi(t)

        return abs(derivative - value * value / self.m - self.lam)


@dataclass(frozen=True)
class TransportVerdict:
    """The global shapes `phi` may take.

    Attributes:
        allowed (`Tuple[RiccatiKind, ...]`): The admissible branches, empty
            when none exist.
        reasoning (`Tuple[str, ...]`): The rules applied, in order.
    """

    allowed: Tuple[RiccatiKind, ...]
    reasoning: Tuple[str, ...]

    @property
    def is_empty(self) -> bool:
        """`bool`: Whether no global `phi` exists."""

        return len(self.allowed) == 0


def transport_verdict(lam: float, m: float, periodic: bool,
                      has_zero: bool) -> TransportVerdict:
    """Decide which transport functions survive along a geodesic.

    Args:
        lam (`float`): The constant of the equation.
        m (`float`): The nonzero parameter.
        periodic (`bool`): Whether the geodesic is periodic.
        has_zero (`bool`): Whether `phi` vanishes somewhere on it.

    Raises:
        ParameterException: If `m` is zero.

    Returns:
        `TransportVerdict`: The admissible branches.
    """

    if m == 0:
        raise ParameterException('m must be nonzero')

    if lam * m > 0:
        return TransportVerdict((), (
            'lambda m > 0: every solution escapes in finite time',
        ))

    if lam == 0:
        return TransportVerdict((RiccatiKind.IDENTICALLY_ZERO,), (
            'lambda = 0: phi vanishes identically',
        ))

    reasoning = ['lambda m < 0: constants and tanh branches are global']

    if not periodic:
        return TransportVerdict((RiccatiKind.CONSTANT_PLUS,
                                 RiccatiKind.CONSTANT_MINUS,
                                 RiccatiKind.TANH_BRANCH),
                                tuple(reasoning))

    reasoning.append('periodic geodesic: tanh branches are not periodic')

    if has_zero:
        reasoning.append('phi has a zero: the constants +-sqrt(-lambda m) '
                         'never vanish')

        return TransportVerdict((), tuple(reasoning))

    return TransportVerdict((RiccatiKind.CONSTANT_PLUS,
                             RiccatiKind.CONSTANT_MINUS), tuple(reasoning))
