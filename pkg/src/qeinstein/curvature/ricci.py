"""Ricci tensor, principal Ricci curvatures and their signatures."""

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, Optional, Tuple

import numpy as np
import sympy

from qeinstein.algebra import scalar
from qeinstein.algebra.geometry import Geometry
from qeinstein.algebra.structure import StructureConstants
from qeinstein.curvature.connection import riemann_tensor
from qeinstein.curvature.exception import FrameException
from qeinstein.curvature.tensor import SymTensor3
from qeinstein.util import config


# Attainable signatures per unimodular group, as sign multisets sorted in
# decreasing order
RICCI_SIGNATURE_TABLE: Dict[Geometry, FrozenSet[Tuple[int, int, int]]] = {
    Geometry.NIL: frozenset({(1, -1, -1)}),
    Geometry.E11: frozenset({(1, -1, -1), (0, 0, -1)}),
    Geometry.SL2R: frozenset({(1, -1, -1), (0, 0, -1)}),
    Geometry.E2: frozenset({(1, -1, -1)}),
    Geometry.R3: frozenset({(0, 0, 0)}),
    Geometry.SU2: frozenset({(1, 1, 1), (1, 0, 0), (1, -1, -1)}),
}

# Flat metrics on these groups are isometric to R^3
FLAT_ROUTES: Dict[Geometry, Geometry] = {
    Geometry.E2: Geometry.R3,
}

# Entries within this many thresholds of zero are reported as borderline
BORDERLINE_FACTOR = 100


def ricci_tensor(sc: StructureConstants) -> SymTensor3:
    """Get `Ric(e_i, e_j) = sum_k g(R(e_k, e_i) e_j, e_k)`.

    Args:
        sc (`StructureConstants`): The bracket.

    Returns:
        `SymTensor3`: The Ricci tensor in the frame.
    """

    ricci = np.einsum('kijk->ij', riemann_tensor(sc))

    if sc.symbolic:
        return SymTensor3.from_matrix(ricci).simplify()

    return SymTensor3.from_matrix(ricci)


def principal_ricci_closed_form(lambda_star: Iterable[Any]
                                ) -> Tuple[Any, Any, Any]:
    """Get the principal Ricci curvatures of a Milnor frame in closed form.

    With `mu_i = (l1* + l2* + l3*) / 2 - l_i*` the curvatures are
    `r(e_i) = 2 mu_j mu_k`.

    Args:
        lambda_star (`Iterable[Any]`): The signed eigenvalues.

    Returns:
        `Tuple[Any, Any, Any]`: `(r(e_1), r(e_2), r(e_3))`.
    """

    values = tuple(lambda_star)

    if not any(isinstance(value, sympy.Basic) for value in values):
        values = scalar.as_scalars(values)

    half_total = sum(values) / 2
    mu = tuple(half_total - value for value in values)

    return (2 * mu[1] * mu[2], 2 * mu[0] * mu[2], 2 * mu[0] * mu[1])


@dataclass(frozen=True)
class RicciSignature:
    """The signs of the principal Ricci curvatures.

    Attributes:
        signs (`Tuple[int, int, int]`): Sign of `r(e_i)` per axis.
        values (`Tuple`): The principal curvatures.
        threshold (`float`): The zero threshold used.
        borderline (`Tuple[int, ...]`): Axes whose nonzero value lies
            within `BORDERLINE_FACTOR` thresholds of zero.
    """

    signs: Tuple[int, int, int]
    values: Tuple[Any, Any, Any]
    threshold: float
    borderline: Tuple[int, ...] = ()

    @property
    def multiset(self) -> Tuple[int, int, int]:
        """`Tuple[int, int, int]`: The signs sorted in decreasing order."""

        return tuple(sorted(self.signs, reverse=True))

    @property
    def is_flat(self) -> bool:
        """`bool`: Whether every principal curvature is zero."""

        return self.signs == (0, 0, 0)

    def symbol(self) -> str:
        """Get the signature as text, e.g. `(+,-,-)`."""

        marks = {1: '+', 0: '0', -1: '-'}

        return '(' + ','.join(marks[sign] for sign in self.signs) + ')'


def ricci_signature(ric: SymTensor3, relative: Optional[float] = None,
                    floor: Optional[float] = None) -> RicciSignature:
    """Classify the principal Ricci curvatures by sign.

    Args:
        ric (`SymTensor3`): A Ricci tensor diagonal in its frame.
        relative (`float`, optional): Threshold relative to the largest
            curvature. Defaults to the configured `signature_relative`.
        floor (`float`, optional): Absolute threshold floor. Defaults to
            the configured `signature_floor`.

    Raises:
        FrameException: If `ric` is not diagonal within the threshold.

    Returns:
        `RicciSignature`: The signature. Exact tensors use a zero
            threshold.
    """

    if relative is None:
        relative = config.tolerance('signature_relative')

    if floor is None:
        floor = config.tolerance('signature_floor')

    values = ric.diagonal()

    if ric.exact:
        threshold = 0.0

    else:
        largest = max(abs(float(value)) for value in values)
        threshold = max(relative * largest, floor)

    if not ric.is_diagonal(max(threshold, floor)):
        raise FrameException(
            f'Ricci tensor is not diagonal: off-diagonal '
            f'{list(ric.off_diagonal())}'
        )

    signs = tuple(scalar.sign(value, threshold) for value in values)

    borderline = tuple(
        index for index, value in enumerate(values)
        if threshold > 0 and signs[index] != 0
        and abs(float(value)) <= BORDERLINE_FACTOR * threshold
    )

    return RicciSignature(signs, tuple(values), threshold, borderline)


def is_attainable(group: Geometry, signature: RicciSignature) -> bool:
    """Check a signature against the attainable rows of `group`.

    Flat metrics are accepted on groups routed to R^3.

    Args:
        group (`Geometry`): A unimodular group.
        signature (`RicciSignature`): The computed signature.

    Returns:
        `bool`: True if the signature is listed for `group`.
    """

    if signature.is_flat and group in FLAT_ROUTES:
        return True

    return signature.multiset in RICCI_SIGNATURE_TABLE.get(group, ())
