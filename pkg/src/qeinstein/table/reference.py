"""The published summary of m-quasi Einstein solutions on the nine model
geometries, kept as data for comparison with computed tables."""

from dataclasses import dataclass
from typing import Dict, Tuple

from qeinstein.algebra.geometry import Geometry
from qeinstein.solver.problem import Verdict


# (sign m, sign A) in table column order
CELL_ORDER: Tuple[Tuple[int, int], ...] = (
    (1, 1), (1, 0), (1, -1),
    (-1, 1), (-1, 0), (-1, -1),
)

GEOMETRY_ORDER: Tuple[Geometry, ...] = tuple(Geometry)


@dataclass(frozen=True)
class ReferenceCell:
    """An expected verdict.

    Attributes:
        verdict (`Verdict`): The published verdict.
        anchor (`str`): Where the verdict comes from.
        disputed (`bool`): Whether the computed verdict is known to differ.
        note (`str`): Why the cell is disputed.
    """

    verdict: Verdict
    anchor: str
    disputed: bool = False
    note: str = ''


_E = Verdict.EXISTS
_T = Verdict.TRIVIAL_ONLY
_N = Verdict.NONE

_ROWS: Dict[Geometry, Tuple[Tuple[Verdict, ...], str]] = {
    Geometry.R3: ((_N, _T, _N, _N, _T, _N),
                  'flat: X = 0 and A = 0 only'),
    Geometry.SU2: ((_E, _E, _E, _E, _N, _N),
                   'axis e1 family on l3 = l2'),
    Geometry.SL2R: ((_N, _N, _N, _N, _E, _N),
                    'axis e3 family on l2 = l1'),
    Geometry.NIL: ((_N, _N, _E, _N, _N, _N),
                   'axis e1 family, A = -l1^2 / 2'),
    Geometry.E11: ((_N, _N, _N, _N, _N, _N),
                   'no admissible axis'),
    Geometry.E2: ((_N, _N, _N, _N, _N, _N),
                  'only the flat metric is Killing admissible'),
    Geometry.H3: ((_N, _N, _T, _N, _N, _T),
                  'hyperbolic space form, A = -rho'),
    Geometry.S2XR: ((_N, _N, _N, _E, _N, _N),
                    'Einstein product with a line, A = rho'),
    Geometry.H2XR: ((_N, _N, _E, _N, _N, _N),
                    'line field on the central axis, A = -k^2'),
}

# The only Killing locus of SL2(R)~ is l* = (l1, l1, -l3), l1, l3 > 0,
# with X = a e3 and Ricci diagonal r1 = r2 = -l3 (l1 + l3 / 2),
# r3 = l3^2 / 2. The equations read A = r1 and a^2 = m (r3 - r1).
_DISPUTED: Dict[Tuple[Geometry, int, int], str] = {
    (Geometry.SL2R, 1, -1): (
        'on l* = (l1, l1, -l3) the field X = a e3 is Killing with '
        'A = r1 = -l3 (l1 + l3 / 2) < 0 and a^2 = m (r3 - r1) = '
        'm l3 (l1 + l3) > 0 for m > 0, e.g. l* = (2, 2, -2), m = 2, '
        'X = +-4 e3, A = -6'
    ),
    (Geometry.SL2R, -1, 0): (
        'on the Killing locus l* = (l1, l1, -l3) the Ricci signature is '
        '(-,-,+), never (0,0,-), and A = r1 = -l3 (l1 + l3 / 2) < 0, so '
        'A = 0 is unreachable; every case is eliminated'
    ),
}


def _build() -> Dict[Tuple[Geometry, int, int], ReferenceCell]:
    table = {}

    for group, (verdicts, anchor) in _ROWS.items():
        for (sign_m, sign_A), verdict in zip(CELL_ORDER, verdicts):
            note = _DISPUTED.get((group, sign_m, sign_A), '')
            table[(group, sign_m, sign_A)] = ReferenceCell(
                verdict, anchor, disputed=len(note) > 0, note=note)

    return table


REFERENCE_TABLE: Dict[Tuple[Geometry, int, int], ReferenceCell] = _build()
