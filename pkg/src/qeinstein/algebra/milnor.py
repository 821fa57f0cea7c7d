"""Milnor frames of the unimodular 3-dimensional Lie algebras.

A Milnor frame is an orthonormal frame with `[e_2, e_3] = l1* e_1`,
`[e_3, e_1] = l2* e_2` and `[e_1, e_2] = l3* e_3`. Relabelling the axes
and reversing the orientation (`l_i* -> -l_i*`) give another Milnor
frame of the same metric, so every signed triple is brought into the
canonical sign order of `SIGN_PATTERNS` on construction.
"""

import itertools
import json
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Tuple, Union

import sympy

from qeinstein.algebra import scalar
from qeinstein.algebra.exception import (
    InvalidSignPatternException,
    NotUnimodularException,
)
from qeinstein.algebra.geometry import SIGN_PATTERNS, Geometry
from qeinstein.algebra.structure import StructureConstants
from qeinstein.util import config, log


@dataclass(frozen=True)
class SignClassification:
    """The group matching a signed triple and the relabelling used.

    The canonical triple is
    `canonical[i] = orientation * source[permutation[i]]`.
    """

    group: Geometry
    permutation: Tuple[int, int, int]
    orientation: int
    canonical: Tuple[Any, Any, Any]


def _signs(lambda_star: Tuple[Any, ...], tolerance: float
           ) -> Tuple[int, ...]:
    return tuple(scalar.sign(value, tolerance) for value in lambda_star)


def classify_group_from_signs(lambda_star: Iterable[Any],
                              tolerance: Optional[float] = None
                              ) -> SignClassification:
    """Find the unimodular group whose sign pattern matches `lambda_star`.

    Args:
        lambda_star (`Iterable[Any]`): The signed bracket eigenvalues.
        tolerance (`float`, optional): Zero threshold for floats. Defaults
            to the configured structural tolerance.

    Raises:
        NotUnimodularException: If the input is not a finite triple.

    Returns:
        `SignClassification`: The group, the relabelling and the
            canonical triple. The identity relabelling is preferred.
    """

    if tolerance is None:
        tolerance = config.tolerance('structural')

    try:
        values = scalar.as_scalars(lambda_star)

    except (TypeError, ValueError) as error:
        raise NotUnimodularException(
            f'not unimodular-3D: {error}'
        ) from error

    if len(values) != 3:
        raise NotUnimodularException(
            f'not unimodular-3D: expected 3 values, got {len(values)}'
        )

    signs = _signs(values, tolerance)

    for permutation in itertools.permutations(range(3)):
        for orientation in (1, -1):
            candidate = tuple(orientation * signs[index]
                              for index in permutation)

            for group, pattern in SIGN_PATTERNS.items():
                if candidate != pattern:
                    continue

                canonical = tuple(orientation * values[index]
                                  for index in permutation)

                return SignClassification(group, permutation, orientation,
                                          canonical)

    raise NotUnimodularException(f'not unimodular-3D: signs {signs}')


@dataclass(frozen=True)
class MilnorFrame:
    """A Milnor frame in canonical sign order.

    Build frames with `MilnorFrame.create`, which relabels the axes;
    the constructor only checks that the order is already canonical.

    Attributes:
        lambda_star (`Tuple`): The canonical signed eigenvalues.
        group (`Geometry`): The unimodular group.
        permutation (`Tuple[int, int, int]`): The relabelling applied to
            the input triple.
        orientation (`int`): 1, or -1 if the orientation was reversed.
    """

    lambda_star: Tuple[Any, Any, Any]
    group: Geometry
    permutation: Tuple[int, int, int] = (0, 1, 2)
    orientation: int = 1

    def __post_init__(self):
        if not isinstance(self.group, Geometry):
            raise TypeError('group must be of type Geometry')

        if self.group not in SIGN_PATTERNS:
            raise NotUnimodularException(
                f'{self.group.display_name} has no Milnor frame'
            )

        values = tuple(self.lambda_star)

        if len(values) != 3:
            raise NotUnimodularException(
                f'not unimodular-3D: expected 3 values, got {len(values)}'
            )

        values = scalar.as_scalars(values)
        signs = _signs(values, config.tolerance('structural'))

        if signs != SIGN_PATTERNS[self.group]:
            raise InvalidSignPatternException(
                f'signs {signs} do not match {self.group.display_name} '
                f'{SIGN_PATTERNS[self.group]}'
            )

        object.__setattr__(self, 'lambda_star', values)

    @classmethod
    def create(cls, lambda_star: Iterable[Any],
               group: Optional[Union[Geometry, str]] = None
               ) -> 'MilnorFrame':
        """Create a frame, relabelling the axes into canonical order.

        Args:
            lambda_star (`Iterable[Any]`): The signed eigenvalues in any
                order.
            group (`Geometry` | `str`, optional): The expected group. When
                given, the signs must match it.

        Raises:
            InvalidSignPatternException: If the signs belong to another
                group.
            NotUnimodularException: If the input is not a finite triple.

        Returns:
            `MilnorFrame`: The canonical frame.
        """

        if isinstance(group, str):
            group = Geometry.from_name(group)

        classification = classify_group_from_signs(lambda_star)

        if group is not None and classification.group != group:
            raise InvalidSignPatternException(
                f'{tuple(lambda_star)} is a '
                f'{classification.group.display_name} pattern, not '
                f'{group.display_name}'
            )

        if classification.permutation != (0, 1, 2) \
                or classification.orientation != 1:
            log.debug('Relabelled Milnor frame', {
                'permutation': classification.permutation,
                'orientation': classification.orientation,
            })

        return cls(classification.canonical, classification.group,
                   classification.permutation, classification.orientation)

    @property
    def magnitudes(self) -> Tuple[Any, Any, Any]:
        """`Tuple`: The magnitudes `l_i = |l_i*|`."""

        return tuple(abs(value) for value in self.lambda_star)

    @property
    def exact(self) -> bool:
        """`bool`: Whether the eigenvalues are exact."""

        return not any(isinstance(value, float)
                       for value in self.lambda_star)

    def structure_constants(self) -> StructureConstants:
        """Get the bracket, see `milnor_to_structure`."""

        return milnor_to_structure(self)

    def scaled(self, factor: Any) -> 'MilnorFrame':
        """Get the frame with every eigenvalue multiplied by `factor > 0`."""

        return MilnorFrame(
            tuple(value * factor for value in self.lambda_star),
            self.group,
        )

    def to_json(self) -> Dict[str, Any]:
        """Get the JSON object `{"group": ..., "lambda_star": [...]}`."""

        return {
            'group': self.group.value,
            'lambda_star': [scalar.to_json_number(value)
                            for value in self.lambda_star],
        }

    @classmethod
    def from_json(cls, data: Union[str, Dict[str, Any]]) -> 'MilnorFrame':
        """Create a frame from its JSON object or text.

        Args:
            data (`str` | `Dict[str, Any]`): The JSON.

        Raises:
            TypeError: If `data` is neither a string nor a dict.
            ValueError: If a key is missing.

        Returns:
            `MilnorFrame`: The canonical frame.
        """

        if isinstance(data, str):
            data = json.loads(data)

        if not isinstance(data, dict):
            raise TypeError('data must be of type str or dict')

        for key in ('group', 'lambda_star'):
            if key not in data:
                raise ValueError(f'frame JSON is missing "{key}"')

        return cls.create(data['lambda_star'], data['group'])


def structure_from_lambda_star(lambda_star: Tuple[Any, Any, Any],
                               validate: bool = True
                               ) -> StructureConstants:
    """Place a signed triple into cyclic bracket position.

    Args:
        lambda_star (`Tuple[Any, Any, Any]`): The eigenvalues, numbers or
            sympy expressions.
        validate (`bool`, optional): Passed to `StructureConstants`.

    Returns:
        `StructureConstants`: The constants of `[e_2, e_3] = l1* e_1` and
            its cyclic shifts.
    """

    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]

    for k in range(3):
        i, j = (k + 1) % 3, (k + 2) % 3
        c[k][i][j] = lambda_star[k]
        c[k][j][i] = -lambda_star[k]

    return StructureConstants(c, validate=validate)


def milnor_to_structure(frame: MilnorFrame) -> StructureConstants:
    """Get the structure constants of a Milnor frame.

    Args:
        frame (`MilnorFrame`): The frame.

    Raises:
        TypeError: If `frame` is not a `MilnorFrame`.
        InvalidSignPatternException: If the signs do not match the group.

    Returns:
        `StructureConstants`: Three independent cyclically placed
            coefficients.
    """

    if not isinstance(frame, MilnorFrame):
        raise TypeError('frame must be of type MilnorFrame')

    signs = _signs(frame.lambda_star, config.tolerance('structural'))

    if signs != SIGN_PATTERNS[frame.group]:
        raise InvalidSignPatternException(
            f'signs {signs} do not match {frame.group.display_name}'
        )

    return structure_from_lambda_star(frame.lambda_star)


def symbolic_lambda_star(group: Geometry
                         ) -> Tuple[Tuple[sympy.Expr, ...],
                                    Tuple[sympy.Symbol, ...]]:
    """Get a symbolic triple in the sign pattern of `group`.

    Args:
        group (`Geometry`): A unimodular group.

    Raises:
        NotUnimodularException: If `group` has no Milnor frame.

    Returns:
        `Tuple`: The triple `(s_1 l1, s_2 l2, s_3 l3)` with positive
            symbols and the symbols of the nonzero entries.
    """

    if group not in SIGN_PATTERNS:
        raise NotUnimodularException(f'{group.display_name} has no Milnor '
                                     f'frame')

    lambda_star = []
    symbols = []

    for index, sign in enumerate(SIGN_PATTERNS[group]):
        if sign == 0:
            lambda_star.append(sympy.Integer(0))
            continue

        symbol = sympy.Symbol(f'l{index + 1}', positive=True)
        symbols.append(symbol)
        lambda_star.append(sign * symbol)

    return tuple(lambda_star), tuple(symbols)


def symbolic_milnor_frame(group: Geometry
                          ) -> Tuple[StructureConstants,
                                     Tuple[sympy.Symbol, ...]]:
    """Get symbolic structure constants for `group`.

    Returns:
        `Tuple[StructureConstants, Tuple[sympy.Symbol, ...]]`: The
            constants and the positive magnitude symbols.
    """

    lambda_star, symbols = symbolic_lambda_star(group)

    return structure_from_lambda_star(lambda_star, validate=False), symbols
