"""The m-quasi Einstein equation on a product `M x N` of Einstein
manifolds.

On a product with a factor of dimension at least two, the restriction
of `X` to that factor vanishes, so `X` lives on a line factor if it lives
anywhere. Along the line, `phi = g(X, d/dr)` satisfies the Riccati
equation with `lambda = A`, and the other factor forces `A = rho`.
"""

from dataclasses import dataclass
from typing import Any

import numpy as np

from qeinstein.algebra import scalar
from qeinstein.products.exception import ParameterException
from qeinstein.products.factor import EinsteinFactor, ProductVerdict
from qeinstein.riccati import RiccatiKind, transport_verdict
from qeinstein.solver.problem import Verdict
from qeinstein.util import log


def _check_m(m: Any) -> Any:
    if scalar.is_zero(m):
        raise ParameterException('m must be nonzero')

    return scalar.as_scalar(m)


def _check_factor(factor: Any, name: str):
    if not isinstance(factor, EinsteinFactor):
        raise TypeError(f'{name} must be of type EinsteinFactor')


def product_qe(factor_m: EinsteinFactor, factor_n: EinsteinFactor, m: Any,
               compact_quotient: bool = False) -> ProductVerdict:
    """Solve `ric_X^m = A g` on `factor_m x factor_n`.

    Args:
        factor_m (`EinsteinFactor`): The first factor.
        factor_n (`EinsteinFactor`): The second factor.
        m (`Any`): The nonzero parameter.
        compact_quotient (`bool`, optional): Whether only solutions
            descending to a compact quotient count, which keeps the
            constant branches along the line. Defaults to False.

    Raises:
        TypeError: If a factor is not an `EinsteinFactor`.
        ParameterException: If `m` is zero.

    Returns:
        `ProductVerdict`: The solutions.
    """

    _check_factor(factor_m, 'factor_m')
    _check_factor(factor_n, 'factor_n')
    m = _check_m(m)

    if not factor_m.is_line and not factor_n.is_line:
        reasoning = (
            'no factor is a line: X restricted to each factor vanishes',
            'X = 0: the product is Einstein only when rho_M = rho_N',
        )

        if factor_m.rho == factor_n.rho:
            verdict = ProductVerdict(Verdict.TRIVIAL_ONLY, factor_m.rho,
                                     reasoning=reasoning)

        else:
            verdict = ProductVerdict(Verdict.NONE, reasoning=reasoning + (
                f'rho_M = {factor_m.rho} differs from rho_N = '
                f'{factor_n.rho}',
            ))

    else:
        other = factor_n if factor_m.is_line else factor_m
        rho = other.rho
        reasoning = (
            f'X lives on the line, the factor {other.label} forces '
            f'A = rho = {rho}',
        )
        transport = transport_verdict(float(rho), float(m),
                                      periodic=compact_quotient,
                                      has_zero=False)
        reasoning += transport.reasoning

        if transport.is_empty:
            verdict = ProductVerdict(Verdict.NONE, reasoning=reasoning)

        elif transport.allowed == (RiccatiKind.IDENTICALLY_ZERO,):
            verdict = ProductVerdict(Verdict.TRIVIAL_ONLY, rho,
                                     reasoning=reasoning)

        else:
            coefficient = scalar.sqrt(-rho * m)
            verdict = ProductVerdict(
                Verdict.EXISTS, rho,
                field=f'X = +-{coefficient} d/dr',
                coefficient=coefficient,
                branches=transport.allowed,
                reasoning=reasoning,
            )

    log.debug('Product verdict', {
        'factors': [factor_m.label, factor_n.label],
        'm': scalar.to_json_number(m),
        'verdict': verdict.verdict.value,
    })

    return verdict


def restrict_to_cell(verdict: ProductVerdict, sign_A: int) -> ProductVerdict:
    """Keep `verdict` only when its Einstein constant has sign `sign_A`."""

    if verdict.verdict == Verdict.NONE:
        return verdict

    if scalar.sign(verdict.A) == sign_A:
        return verdict

    return ProductVerdict(Verdict.NONE, reasoning=verdict.reasoning + (
        f'A = {verdict.A} lies outside the cell',
    ))


def _check_signs(sign_m: int, sign_A: int):
    if sign_m not in (-1, 1):
        raise ParameterException(f'sign_m must be -1 or 1, got {sign_m}')

    if sign_A not in (-1, 0, 1):
        raise ParameterException(f'sign_A must be -1, 0 or 1, got {sign_A}')


def product_cell(factor_m: EinsteinFactor, factor_n: EinsteinFactor,
                 sign_m: int, sign_A: int, compact_quotient: bool = True
                 ) -> ProductVerdict:
    """Decide the sign cell `(sign m, sign A)` of a product.

    The verdict depends on `m` only through its sign, so `m = sign_m` is
    used as the representative.

    Raises:
        ParameterException: If a sign is out of range.

    Returns:
        `ProductVerdict`: The verdict of the cell.
    """

    _check_signs(sign_m, sign_A)

    return restrict_to_cell(
        product_qe(factor_m, factor_n, sign_m, compact_quotient), sign_A)


@dataclass(frozen=True)
class ProductTensors:
    """The blocks of `ric_X^m` on `factor x R` for `X = c d/dr`.

    Attributes:
        ricci (`np.ndarray`): `diag(rho g_M, 0)`.
        lie_derivative (`np.ndarray`): `L_X g`, zero for constant `c`.
        dual_square (`np.ndarray`): `X* (x) X* = diag(0, c^2)`.
        bakry_emery (`np.ndarray`): `ric_X^m`.
        residual (`float`): Sup norm of `ric_X^m - A g`.
    """

    ricci: np.ndarray
    lie_derivative: np.ndarray
    dual_square: np.ndarray
    bakry_emery: np.ndarray
    residual: float


def assemble_product_tensors(factor: EinsteinFactor, coefficient: Any,
                             m: Any, A: Any) -> ProductTensors:
    """Assemble `ric_X^m` blockwise in an orthonormal frame of
    `factor x R` with the line direction last.

    Args:
        factor (`EinsteinFactor`): The factor next to the line.
        coefficient (`Any`): The constant `c` of `X = c d/dr`.
        m (`Any`): The nonzero parameter.
        A (`Any`): The Einstein constant to test against.

    Raises:
        TypeError: If `factor` is not an `EinsteinFactor`.
        ParameterException: If `m` is zero.

    Returns:
        `ProductTensors`: The blocks and the residual.
    """

    _check_factor(factor, 'factor')
    m = float(_check_m(m))
    size = factor.dim + 1

    ricci = np.zeros((size, size))
    ricci[:factor.dim, :factor.dim] = float(factor.rho) * np.eye(factor.dim)

    lie_derivative = np.zeros((size, size))

    dual_square = np.zeros((size, size))
    dual_square[-1, -1] = float(coefficient) ** 2

    bakry_emery = ricci + lie_derivative / 2 - dual_square / m
    residual = float(np.abs(bakry_emery - float(A) * np.eye(size)).max())

    return ProductTensors(ricci, lie_derivative, dual_square, bakry_emery,
                          residual)
