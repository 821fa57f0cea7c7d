"""Solution families over a whole geometry and the sign cell verdicts.

Families are derived on symbolic frames whose magnitudes are positive
symbols: `X = 0` on the Einstein locus, and on each Killing admissible
axis `a_k^2 = m P` with `A = Q`, where `P` and `Q` are homogeneous
quadratics. After solving the Killing constraint and fixing the first free
magnitude to 1, at most one parameter `u > 0` remains, so the signs of
`P`, `Q` and the principal Ricci curvatures are decided exactly at the
real roots, between them and beyond them.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from qeinstein.algebra import scalar
from qeinstein.algebra.geometry import SIGN_PATTERNS, Geometry
from qeinstein.algebra.milnor import (
    MilnorFrame,
    symbolic_lambda_star,
    symbolic_milnor_frame,
)
from qeinstein.algebra.structure import H2xRFrame, LeftInvariantField
from qeinstein.bakry_emery import (
    BakryEmeryInput,
    bakry_emery_tensor,
    is_killing,
)
from qeinstein.bakry_emery.exception import ParameterException
from qeinstein.curvature import RICCI_SIGNATURE_TABLE, SymTensor3, ricci_tensor
from qeinstein.solver.exception import (
    SolutionCheckException,
    UnknownGroupException,
)
from qeinstein.solver.fixed import (
    killing_reduction,
    provenance,
    solve_fixed_metric,
)
from qeinstein.solver.problem import (
    ELIMINATED,
    REFERENCE,
    SOLUTION,
    CaseRecord,
    CellVerdict,
    QESolution,
    QESolutionFamily,
    SolveReport,
    Verdict,
    Witness,
    sign_label,
)
from qeinstein.util import config, log


_SIGN_MARKS = {1: '+', 0: '0', -1: '-'}


def _signature_text(multiset: Tuple[int, ...]) -> str:
    return '(' + ','.join(_SIGN_MARKS[sign] for sign in multiset) + ')'


def _exact_sign(value: sympy.Expr) -> int:
    value = sympy.simplify(value)

    if value == 0:
        return 0

    return 1 if value.evalf() > 0 else -1


class Region:
    """The metrics of a family, normalized to one free parameter.

    Args:
        symbols (`Sequence[sympy.Symbol]`): The positive magnitude symbols.
        constraint (`Dict[sympy.Symbol, sympy.Expr]`): The family
            constraint.

    Raises:
        SolutionCheckException: If more than one parameter remains.
    """

    def __init__(self, symbols: Sequence[sympy.Symbol],
                 constraint: Dict[sympy.Symbol, sympy.Expr]):
        self.constraint = dict(constraint)

        free = sorted((symbol for symbol in symbols
                       if symbol not in self.constraint), key=str)

        if len(free) > 2:
            raise SolutionCheckException(
                f'sign analysis needs at most one free parameter, got {free}'
            )

        self.base = free[0] if len(free) > 0 else None
        self.parameter = free[1] if len(free) > 1 else None

    def reduce(self, expression: Any) -> sympy.Expr:
        """Put `expression` on the region as a function of the parameter."""

        reduced = sympy.sympify(expression).subs(self.constraint)

        if self.base is not None:
            reduced = reduced.subs(self.base, 1)

        return sympy.simplify(reduced)

    def point(self, value: Optional[sympy.Expr]) -> Dict[sympy.Symbol, Any]:
        """Get every magnitude symbol at parameter `value`."""

        point: Dict[sympy.Symbol, Any] = {}

        if self.base is not None:
            point[self.base] = sympy.Integer(1)

        if self.parameter is not None:
            point[self.parameter] = value

        for symbol, expression in self.constraint.items():
            point[symbol] = sympy.simplify(
                sympy.sympify(expression).subs(point)
            )

        return point

    def candidates(self, expressions: Sequence[Any]
                   ) -> List[Optional[sympy.Expr]]:
        """Get parameter values meeting every sign region of
        `expressions`.

        The values are 1, half the smallest positive root, the roots,
        the midpoints between consecutive roots and one past the largest.
        """

        if self.parameter is None:
            return [None]

        roots = []

        for expression in expressions:
            reduced = self.reduce(expression)

            if reduced == 0 or not reduced.has(self.parameter):
                continue

            for root in sympy.solve(reduced, self.parameter):
                if root.is_real and root.is_positive:
                    roots.append(sympy.simplify(root))

        roots = sorted(set(roots), key=lambda root: float(root))
        points = [sympy.Integer(1)]

        if len(roots) > 0:
            points.append(roots[0] / 2)
            points.extend(roots)
            points.extend((left + right) / 2
                          for left, right in zip(roots, roots[1:]))
            points.append(roots[-1] + 1)

        unique: List[sympy.Expr] = []

        for point in points:
            if not any(sympy.simplify(point - seen) == 0 for seen in unique):
                unique.append(point)

        return unique

    def sign(self, expression: Any, value: Optional[sympy.Expr]) -> int:
        """Get the exact sign of `expression` at parameter `value`."""

        reduced = self.reduce(expression)

        if self.parameter is not None:
            reduced = reduced.subs(self.parameter, value)

        return _exact_sign(reduced)

    def describe(self, value: Optional[sympy.Expr]) -> str:
        """Get the point as `l1 = 1, l2 = 1/2` text."""

        point = self.point(value)

        if len(point) == 0:
            return 'the flat metric'

        return ', '.join(f'{symbol} = {sympy.sstr(point[symbol])}'
                         for symbol in sorted(point, key=str))


@dataclass(frozen=True, eq=False)
class GroupAnalysis:
    """The sign independent derivation for one geometry.

    Attributes:
        group (`Geometry`): The geometry.
        symbols (`Tuple[sympy.Symbol, ...]`): The magnitude symbols.
        lambda_star (`Tuple[sympy.Expr, ...]`): The symbolic bracket
            eigenvalues, `(k,)` for H^2xR.
        ricci (`Tuple[sympy.Expr, ...]`): The principal Ricci curvatures.
        families (`Tuple[QESolutionFamily, ...]`): Einstein and Killing
            families.
        records (`Tuple[CaseRecord, ...]`): Cases eliminated for every sign.
    """

    group: Geometry
    symbols: Tuple[sympy.Symbol, ...]
    lambda_star: Tuple[sympy.Expr, ...]
    ricci: Tuple[sympy.Expr, ...]
    families: Tuple[QESolutionFamily, ...]
    records: Tuple[CaseRecord, ...]


def _einstein_families(group: Geometry, symbols: Tuple[sympy.Symbol, ...],
                       ricci: Tuple[sympy.Expr, ...]
                       ) -> Tuple[List[QESolutionFamily], List[CaseRecord]]:
    differences = [sympy.simplify(ricci[1] - ricci[0]),
                   sympy.simplify(ricci[2] - ricci[1])]
    equations = [difference for difference in differences if difference != 0]

    if len(equations) == 0:
        constraints: List[Dict[sympy.Symbol, sympy.Expr]] = [{}]

    else:
        constraints = [
            solution for solution in
            sympy.solve(equations, list(symbols), dict=True)
            if all(value.is_positive is not False
                   for value in solution.values())
        ]

    families = []
    records = []

    for constraint in constraints:
        values = [sympy.simplify(value.subs(constraint)) for value in ricci]

        if not all(sympy.simplify(value - values[0]) == 0
                   for value in values):
            continue

        if group != Geometry.R3 and all(value == 0 for value in values):
            log.debug('Routing flat metrics to R^3', group.value)
            records.append(CaseRecord(
                'X = 0', ELIMINATED,
                f'Ric = 0 on {constraint}, the metric is flat and is '
                f'classified as R^3',
            ))
            continue

        families.append(QESolutionFamily(
            group=group,
            axis=None,
            coefficient_squared=sympy.Integer(0),
            A=values[0],
            constraint=constraint,
            provenance=REFERENCE,
        ))

    if len(families) == 0 and len(records) == 0:
        records.append(CaseRecord(
            'X = 0', ELIMINATED,
            f'r1 = r2 = r3 has no solution with positive magnitudes, '
            f'r = ({", ".join(sympy.sstr(value) for value in ricci)})',
        ))

    return families, records


def _support_records() -> List[CaseRecord]:
    records = [
        CaseRecord(f'X on e{i + 1}, e{j + 1}', ELIMINATED,
                   f'(e{i + 1}, e{j + 1}): -a{i + 1} a{j + 1} / m = 0')
        for i, j in ((0, 1), (0, 2), (1, 2))
    ]
    records.append(CaseRecord(
        'X on e1, e2, e3', ELIMINATED,
        'a_j^2 = m^2 d_i d_k for every j with d1 + d2 + d3 = 0, so one '
        'product d_i d_k is not positive',
    ))

    return records


@lru_cache(maxsize=None)
def _milnor_analysis(group: Geometry) -> GroupAnalysis:
    sc, symbols = symbolic_milnor_frame(group)
    lambda_star, _ = symbolic_lambda_star(group)
    ricci = tuple(sympy.simplify(value)
                  for value in ricci_tensor(sc).diagonal())

    families, records = _einstein_families(group, symbols, ricci)
    admissible = {entry.axis: entry for entry in killing_reduction(group)}

    for axis in range(3):
        i, j = (axis + 1) % 3, (axis + 2) % 3
        case = f'X on e{axis + 1}'

        if axis not in admissible:
            records.append(CaseRecord(
                case, ELIMINATED,
                f'(e{i + 1}, e{j + 1}): a{axis + 1} (l{i + 1}* - l{j + 1}*)'
                f' / 2 = 0 has no solution with a{axis + 1} != 0 in the '
                f'{group.display_name} sign pattern',
            ))
            continue

        constraint = admissible[axis].constraint
        values = [sympy.simplify(sympy.sympify(value).subs(constraint))
                  for value in ricci]

        if sympy.simplify(values[i] - values[j]) != 0:
            records.append(CaseRecord(
                case, ELIMINATED,
                f'r{i + 1} = r{j + 1} fails on {constraint}',
            ))
            continue

        P = sympy.factor(values[axis] - values[i])

        if P == 0:
            records.append(CaseRecord(
                case, ELIMINATED,
                f'a{axis + 1}^2 = m (r{axis + 1} - r{i + 1}) = 0 on '
                f'{admissible[axis].constraint_text()}, so X = 0',
            ))
            continue

        families.append(QESolutionFamily(
            group=group,
            axis=axis,
            coefficient_squared=P,
            A=sympy.factor(values[i]),
            constraint=constraint,
            provenance=provenance(group, axis),
        ))

    records.extend(_support_records())

    return GroupAnalysis(group, tuple(symbols), tuple(lambda_star), ricci,
                         tuple(families), tuple(records))


@lru_cache(maxsize=None)
def _h2xr_analysis(sign_m: int) -> GroupAnalysis:
    k = sympy.Symbol('k', positive=True)
    M = sympy.Symbol('M', positive=True)
    m = sign_m * M
    sc = H2xRFrame(k).structure_constants()
    ric = ricci_tensor(sc)
    a = sympy.symbols('a1:4', real=True)
    A = sympy.Symbol('A', real=True)
    X = LeftInvariantField(a)

    tensor = bakry_emery_tensor(BakryEmeryInput.create(sc, X, m, ric)) \
        - SymTensor3.identity(A)
    equations = [sympy.simplify(sympy.sympify(value))
                 for value in tensor.entries if not scalar.is_zero(value)]

    families = []
    records = []

    for solution in sympy.solve(equations, list(a) + [A], dict=True):
        if any(unknown not in solution for unknown in list(a) + [A]):
            continue

        values = tuple(solution[unknown] for unknown in a)

        if any(value.is_real is False for value in values):
            continue

        field = LeftInvariantField(values)
        support = field.support()

        if len(support) != 1:
            records.append(CaseRecord(
                f'X = {values}', ELIMINATED,
                'the field is not on a single axis',
            ))
            continue

        axis = support[0]
        killing = bool(is_killing(sc, field))

        if not killing:
            records.append(CaseRecord(
                f'X on e{axis + 1}', ELIMINATED,
                'not Killing, so not invariant under a cocompact lattice',
            ))
            continue

        families.append(QESolutionFamily(
            group=Geometry.H2XR,
            axis=axis,
            coefficient_squared=sympy.simplify(values[axis] ** 2 / m),
            A=sympy.simplify(solution[A]),
            provenance=provenance(Geometry.H2XR, axis),
        ))

    # Solutions only at isolated values of m
    for solution in sympy.solve(equations, list(a) + [A, M], dict=True):
        if M not in solution:
            continue

        values = tuple(solution.get(unknown, 0) for unknown in a)
        records.append(CaseRecord(
            f'X = {values} at m = {sympy.sstr(m.subs(solution))}',
            ELIMINATED,
            'only at an isolated m and not Killing, excluded from compact '
            'quotients',
        ))

    if len(families) == 0:
        records.append(CaseRecord(
            'all fields', ELIMINATED,
            f'no real Killing solution for m {sign_label(sign_m)}',
        ))

    return GroupAnalysis(Geometry.H2XR, (k,), (k,),
                         tuple(sympy.simplify(value)
                               for value in ric.diagonal()),
                         tuple(families), tuple(records))


def analyse(group: Union[Geometry, str], sign_m: int = 1) -> GroupAnalysis:
    """Derive the solution families of a Lie group geometry.

    Args:
        group (`Geometry` | `str`): The geometry.
        sign_m (`int`, optional): The sign of m, only used by H^2xR whose
            system is solved with `m` symbolic. Defaults to 1.

    Raises:
        UnknownGroupException: If the geometry is not a Lie group handled
            by the solver.

    Returns:
        `GroupAnalysis`: The families and the sign independent records.
    """

    if isinstance(group, str):
        group = Geometry.from_name(group)

    if group == Geometry.H2XR:
        return _h2xr_analysis(sign_m)

    if group not in SIGN_PATTERNS:
        raise UnknownGroupException(
            f'{group.display_name} is not a Lie group geometry of the solver,'
            f' use the products module'
        )

    return _milnor_analysis(group)


def derive_families(group: Union[Geometry, str], sign_m: int = 1
                    ) -> Tuple[QESolutionFamily, ...]:
    """Get the Einstein and Killing families of a geometry, see
    `analyse`."""

    return analyse(group, sign_m).families


def _meets_cell(family: QESolutionFamily, region: Region,
                value: Optional[sympy.Expr], sign_m: int,
                sign_A: int) -> bool:
    if region.sign(family.A, value) != sign_A:
        return False

    if family.axis is None:
        return True

    return region.sign(family.coefficient_squared, value) == sign_m


def _is_flat_point(analysis: GroupAnalysis, region: Region,
                   value: Optional[sympy.Expr]) -> bool:
    if analysis.group == Geometry.R3:
        return False

    return all(region.sign(r, value) == 0 for r in analysis.ricci)


def _hits(analysis: GroupAnalysis, family: QESolutionFamily, region: Region,
          values: List[Optional[sympy.Expr]], sign_m: int, sign_A: int
          ) -> List[Optional[sympy.Expr]]:
    return [
        value for value in values
        if _meets_cell(family, region, value, sign_m, sign_A)
        and not (family.axis is not None
                 and _is_flat_point(analysis, region, value))
    ]


def _family_records(analysis: GroupAnalysis, family: QESolutionFamily,
                    region: Region, candidates: List[Optional[sympy.Expr]],
                    sign_m: int, sign_A: int) -> List[CaseRecord]:
    if family.axis is None:
        outcome = ELIMINATED

        if any(_meets_cell(family, region, value, sign_m, sign_A)
               for value in candidates):
            outcome = SOLUTION

        return [CaseRecord(
            f'X = 0 on {family.constraint_text()}', outcome,
            f'A = {sympy.sstr(family.A)} needs sign {sign_A}',
        )]

    axis = family.axis
    branches: Dict[Tuple[int, ...], List[Optional[sympy.Expr]]] = {}

    for value in candidates:
        multiset = tuple(sorted((region.sign(r, value)
                                 for r in analysis.ricci), reverse=True))
        branches.setdefault(multiset, []).append(value)

    listed = set(RICCI_SIGNATURE_TABLE.get(analysis.group, ()))
    records = []

    for multiset in sorted(listed | set(branches), reverse=True):
        case = f'axis e{axis + 1}, signature {_signature_text(multiset)}'
        values = branches.get(multiset, [])

        if len(values) == 0:
            records.append(CaseRecord(
                case, ELIMINATED,
                f'the signature does not occur on the Killing locus '
                f'{family.constraint_text()}',
            ))
            continue

        hits = _hits(analysis, family, region, values, sign_m, sign_A)

        if len(hits) > 0:
            records.append(CaseRecord(
                case, SOLUTION,
                f'a{axis + 1}^2 = m '
                f'({sympy.sstr(family.coefficient_squared)}),'
                f' A = {sympy.sstr(family.A)} at {region.describe(hits[0])}',
            ))
            continue

        observed = sorted({
            (region.sign(family.coefficient_squared, value),
             region.sign(family.A, value)) for value in values
        })
        records.append(CaseRecord(
            case, ELIMINATED,
            f'a{axis + 1}^2 / m = {sympy.sstr(family.coefficient_squared)} '
            f'needs sign {sign_m} and A = {sympy.sstr(family.A)} needs sign '
            f'{sign_A}; the branch only has signs {observed}',
        ))

    return records


def _rational(value: float) -> Fraction:
    return Fraction(value).limit_denominator(100)


def _matching(report: SolveReport, trivial: bool, sign_A: int
              ) -> Optional[QESolution]:
    tolerance = config.tolerance('solution')

    for solution in report:
        if solution.is_trivial != trivial:
            continue

        if not trivial and not solution.killing:
            continue

        if scalar.sign(solution.A, tolerance) == sign_A:
            return solution

    return None


def _frame_at(group: Geometry, values: Sequence[Any]
              ) -> Union[MilnorFrame, H2xRFrame]:
    if group == Geometry.H2XR:
        return H2xRFrame(scalar.as_scalar(values[0]))

    return MilnorFrame.create(scalar.as_scalars(values), group)


def _witness(analysis: GroupAnalysis, family: QESolutionFamily,
             region: Region, value: Optional[sympy.Expr], sign_m: int,
             sign_A: int, draws: int, seed: int) -> Witness:
    point = region.point(value)
    base = [sympy.simplify(sympy.sympify(entry).subs(point))
            for entry in analysis.lambda_star]
    trivial = family.axis is None

    frame = _frame_at(analysis.group, [2 * entry for entry in base])
    m = 2 * sign_m
    solution = _matching(solve_fixed_metric(frame, m), trivial, sign_A)

    if solution is None:
        raise SolutionCheckException(
            f'no witness for {analysis.group.display_name} at '
            f'{frame.to_json()}, m = {m}'
        )

    rng = np.random.default_rng(seed)
    confirmed = 0

    for _ in range(draws):
        scale = _rational(rng.uniform(0.5, 3.0))
        size = _rational(rng.uniform(0.5, 3.0))
        drawn = _frame_at(analysis.group,
                          [entry * scalar.to_sympy(scale) for entry in base])

        if _matching(solve_fixed_metric(drawn, sign_m * size), trivial,
                     sign_A) is not None:
            confirmed += 1

        else:
            log.warning('Witness draw not confirmed', {
                'frame': drawn.to_json(),
                'm': sign_m * size,
            })

    return Witness(frame.to_json(), m, solution, confirmed)


def classify_cell(group: Union[Geometry, str], sign_m: int, sign_A: int,
                  witness_draws: Optional[int] = None,
                  seed: Optional[int] = None) -> CellVerdict:
    """Decide whether a geometry has solutions with the given signs.

    Args:
        group (`Geometry` | `str`): A Lie group geometry.
        sign_m (`int`): The sign of m, 1 or -1.
        sign_A (`int`): The sign of A, -1, 0 or 1.
        witness_draws (`int`, optional): Random rescaled metrics confirming
            a witness. Defaults to the configured `witness_draws`.
        seed (`int`, optional): Seed of the draws. Defaults to the
            configured `seed`.

    Raises:
        ParameterException: If a sign is out of range.
        UnknownGroupException: If the geometry is not a Lie group handled
            by the solver.

    Returns:
        `CellVerdict`: `Exists` with a witness when a nontrivial Killing
            family meets the cell, `Trivial` when only `X = 0` does and
            `None` with the case records otherwise.
    """

    if sign_m not in (1, -1):
        raise ParameterException(f'sign_m must be 1 or -1, got {sign_m}')

    if sign_A not in (1, 0, -1):
        raise ParameterException(f'sign_A must be -1, 0 or 1, got {sign_A}')

    if witness_draws is None:
        witness_draws = int(config.get('witness_draws'))

    if seed is None:
        seed = int(config.get('seed'))

    analysis = analyse(group, sign_m)
    records = list(analysis.records)
    met: List[Tuple[QESolutionFamily, Region, Optional[sympy.Expr]]] = []

    for family in analysis.families:
        region = Region(analysis.symbols, family.constraint)
        candidates = region.candidates(
            [family.coefficient_squared, family.A] + list(analysis.ricci)
        )
        records.extend(_family_records(analysis, family, region, candidates,
                                       sign_m, sign_A))

        hits = _hits(analysis, family, region, candidates, sign_m, sign_A)

        if len(hits) > 0:
            met.append((family, region, hits[0]))

    nontrivial = [entry for entry in met if entry[0].axis is not None]

    if len(nontrivial) > 0:
        verdict = Verdict.EXISTS
        chosen = nontrivial[0]

    elif len(met) > 0:
        verdict = Verdict.TRIVIAL_ONLY
        chosen = met[0]

    else:
        verdict = Verdict.NONE
        chosen = None

    witnesses: Tuple[Witness, ...] = ()

    if chosen is not None:
        family, region, value = chosen
        witnesses = (_witness(analysis, family, region, value, sign_m,
                              sign_A, witness_draws, seed),)

    log.debug('Classified cell', {
        'group': analysis.group.value,
        'm': sign_label(sign_m),
        'A': sign_label(sign_A),
        'verdict': verdict.value,
    })

    return CellVerdict(
        group=analysis.group,
        sign_m=sign_m,
        sign_A=sign_A,
        verdict=verdict,
        families=tuple(entry[0] for entry in met),
        witnesses=witnesses,
        certificate=tuple(records),
    )
