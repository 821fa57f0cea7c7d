"""Levi-Civita connection and Riemann tensor of a left-invariant metric.

Every quantity is read in the orthonormal frame the structure constants
are given in, so the metric is the identity and the Koszul formula only
involves brackets.
"""

from dataclasses import dataclass
from typing import Any

import numpy as np

from qeinstein.algebra import scalar
from qeinstein.algebra.structure import StructureConstants


@dataclass(frozen=True, eq=False)
class ConnectionCoefficients:
    """`gamma[i, j, k] = g(nabla_{e_i} e_j, e_k)`."""

    gamma: np.ndarray

    def compatibility_residual(self) -> Any:
        """Get the largest entry of `gamma[i, j, k] + gamma[i, k, j]`."""

        return scalar.max_abs(self.gamma + np.transpose(self.gamma,
                                                        (0, 2, 1)))

    def torsion_residual(self, sc: StructureConstants) -> Any:
        """Get the largest entry of
        `nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i, e_j]`."""

        torsion = (self.gamma - np.transpose(self.gamma, (1, 0, 2))
                   - np.einsum('kij->ijk', sc.c))

        return scalar.max_abs(torsion)


def levi_civita(sc: StructureConstants) -> ConnectionCoefficients:
    """Get the Levi-Civita connection by the Koszul formula.

    Args:
        sc (`StructureConstants`): The bracket.

    Raises:
        TypeError: If `sc` is not `StructureConstants`.

    Returns:
        `ConnectionCoefficients`: `gamma[i, j, k] = (c(i, j, k) -
            c(j, k, i) + c(k, i, j)) / 2` with
            `c(a, b, d) = g([e_a, e_b], e_d)`.
    """

    if not isinstance(sc, StructureConstants):
        raise TypeError('sc must be of type StructureConstants')

    c = sc.c

    gamma = scalar.half(
        np.einsum('kij->ijk', c)
        - c
        + np.einsum('jki->ijk', c)
    )

    return ConnectionCoefficients(gamma)


def riemann_tensor(sc: StructureConstants) -> np.ndarray:
    """Get `R[a, b, c, f] = g(R(e_a, e_b) e_c, e_f)`.

    The curvature is `R(U, V)W = nabla_U nabla_V W - nabla_V nabla_U W -
    nabla_{[U, V]} W`.

    Args:
        sc (`StructureConstants`): The bracket.

    Returns:
        `np.ndarray`: The 3x3x3x3 tensor.
    """

    gamma = levi_civita(sc).gamma
    c = sc.c

    return (
        np.einsum('bcd,adf->abcf', gamma, gamma)
        - np.einsum('acd,bdf->abcf', gamma, gamma)
        - np.einsum('dab,dcf->abcf', c, gamma)
    )


def sectional_curvature(sc: StructureConstants, i: int, j: int) -> Any:
    """Get the sectional curvature of the plane spanned by `e_i`, `e_j`.

    Args:
        sc (`StructureConstants`): The bracket.
        i (`int`): The first frame index.
        j (`int`): The second frame index, different from `i`.

    Raises:
        ValueError: If `i == j`.

    Returns:
        `Any`: `g(R(e_i, e_j) e_j, e_i)`.
    """

    if i == j:
        raise ValueError('i and j must span a plane')

    return riemann_tensor(sc)[i, j, j, i]
