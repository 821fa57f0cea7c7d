"""The nine simply connected model geometries with compact quotients."""

from enum import Enum
from typing import Dict, Tuple


class Geometry(Enum):
    """A model geometry, valued by its command line name."""

    R3 = 'r3'
    SU2 = 'su2'
    SL2R = 'sl2r'
    NIL = 'nil'
    E11 = 'e11'
    E2 = 'e2'
    H3 = 'h3'
    S2XR = 's2xr'
    H2XR = 'h2xr'

    @property
    def display_name(self) -> str:
        """`str`: The name used in reports."""

        return _display_names[self]

    @property
    def is_lie_group(self) -> bool:
        """`bool`: Whether the geometry is a Lie group with a
        left-invariant metric presentation."""

        return self not in (Geometry.H3, Geometry.S2XR)

    @property
    def is_unimodular(self) -> bool:
        """`bool`: Whether the geometry has a Milnor frame."""

        return self in SIGN_PATTERNS

    @classmethod
    def from_name(cls, name: str) -> 'Geometry':
        """Get the geometry with command line name `name`.

        Args:
            name (`str`): The name, case insensitive.

        Raises:
            TypeError: If `name` is not a string.
            ValueError: If `name` is not a known geometry.

        Returns:
            `Geometry`: The geometry.
        """

        if not isinstance(name, str):
            raise TypeError('name must be of type str')

        try:
            return cls(name.strip().lower())

        except ValueError:
            known = ', '.join(geometry.value for geometry in cls)

            raise ValueError(f'Unknown geometry "{name}", expected one of '
                             f'{known}') from None


_display_names: Dict[Geometry, str] = {
    Geometry.R3: 'R^3',
    Geometry.SU2: 'SU(2)',
    Geometry.SL2R: 'SL2(R)~',
    Geometry.NIL: 'Nil',
    Geometry.E11: 'E(1,1)',
    Geometry.E2: 'E(2)',
    Geometry.H3: 'H^3',
    Geometry.S2XR: 'S^2xR',
    Geometry.H2XR: 'H^2xR',
}


# Canonical signs of (l1*, l2*, l3*) for each unimodular group
SIGN_PATTERNS: Dict[Geometry, Tuple[int, int, int]] = {
    Geometry.NIL: (1, 0, 0),
    Geometry.SL2R: (1, 1, -1),
    Geometry.E11: (1, -1, 0),
    Geometry.E2: (1, 1, 0),
    Geometry.R3: (0, 0, 0),
    Geometry.SU2: (1, 1, 1),
}
