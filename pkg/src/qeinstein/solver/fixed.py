"""Solutions of `ric_X^m = A g` on one fixed left-invariant metric.

On a Milnor frame the Ricci tensor is diagonal and `L_X g` only couples
the two axes orthogonal to each component of `X`, so the six equations
split by the support of `(a_1, a_2, a_3)`:

* `X = 0` needs an Einstein metric.
* `X = a_k e_k` needs `a_k (l_i* - l_j*) = 0`, i.e. `e_k` Killing, and then
  `A = r_i = r_j` and `a_k^2 = m (r_k - r_i)`.
* Two nonzero components leave `-a_i a_j / m = 0` on their entry.
* Three nonzero components force `a_j^2 = m^2 d_i d_k` for every `j`, with
  `d_k = (l_i* - l_j*) / 2` summing to zero, so one product is not positive.

Other frames (the H^2xR preset) go through `sympy.solve` on the full system.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Tuple, Union

import sympy

from qeinstein.algebra import scalar
from qeinstein.algebra.geometry import SIGN_PATTERNS, Geometry
from qeinstein.algebra.milnor import MilnorFrame, symbolic_milnor_frame
from qeinstein.algebra.structure import (
    H2xRFrame,
    LeftInvariantField,
    StructureConstants,
)
from qeinstein.bakry_emery import (
    BakryEmeryInput,
    bakry_emery_tensor,
    is_killing,
    lie_derivative_metric,
    qe_residual,
)
from qeinstein.curvature import SymTensor3, ricci_tensor
from qeinstein.solver.exception import (
    SolutionCheckException,
    UnknownGroupException,
)
from qeinstein.solver.problem import (
    ELIMINATED,
    REFERENCE,
    SOLUTION,
    SOLVER_DISCOVERED,
    CaseRecord,
    Frame,
    QEProblem,
    QESolution,
    SolveReport,
    format_constraint,
    sorted_solutions,
)
from qeinstein.util import config, log


# Axes whose families appear in the published classification
REFERENCE_AXES: Dict[Geometry, FrozenSet[int]] = {
    Geometry.NIL: frozenset({0}),
    Geometry.SU2: frozenset({0, 1, 2}),
    Geometry.H2XR: frozenset({2}),
}


def provenance(group: Geometry, axis: Optional[int]) -> str:
    """Get the provenance label of the family on `axis` (None for
    `X = 0`)."""

    if axis is None or axis in REFERENCE_AXES.get(group, frozenset()):
        return REFERENCE

    return SOLVER_DISCOVERED


@dataclass(frozen=True, eq=False)
class AdmissibleAxis:
    """A frame axis whose unit field is Killing under `constraint`.

    Attributes:
        axis (`int`): The axis, 0 to 2.
        constraint (`Dict[sympy.Symbol, sympy.Expr]`): Substitution of the
            magnitude symbols making `e_axis` Killing, empty if it always is.
    """

    axis: int
    constraint: Dict[sympy.Symbol, sympy.Expr] = field(default_factory=dict)

    def constraint_text(self) -> str:
        return format_constraint(self.constraint)


def geometry_of(frame: Frame) -> Geometry:
    """Get the geometry of a Milnor or H^2xR frame."""

    if isinstance(frame, MilnorFrame):
        return frame.group

    if isinstance(frame, H2xRFrame):
        return frame.geometry

    raise TypeError('frame must be of type MilnorFrame or H2xRFrame')


def _solve_constraint(equations: List[sympy.Expr]
                      ) -> Optional[Dict[sympy.Symbol, sympy.Expr]]:
    free = set().union(*(equation.free_symbols for equation in equations))

    if len(free) == 0:
        return None

    # Solve for the last magnitude symbol, l3 before l2 before l1
    symbol = max(free, key=str)

    for solution in sympy.solve(equations[0], symbol):
        if solution.is_positive is False:
            continue

        constraint = {symbol: solution}

        if all(scalar.is_zero(equation.subs(constraint))
               for equation in equations):
            return constraint

    return None


def _symbolic_reduction(group: Geometry) -> Tuple[AdmissibleAxis, ...]:
    if group == Geometry.H2XR:
        return (AdmissibleAxis(2),)

    if group not in SIGN_PATTERNS:
        raise UnknownGroupException(
            f'{group.display_name} is not a Lie group geometry of the solver'
        )

    sc, _ = symbolic_milnor_frame(group)
    admissible = []

    for axis in range(3):
        lie = lie_derivative_metric(sc, LeftInvariantField.basis(axis))
        equations = [sympy.simplify(value) for value in lie.entries
                     if not scalar.is_zero(value)]

        if len(equations) == 0:
            admissible.append(AdmissibleAxis(axis))
            continue

        constraint = _solve_constraint(equations)

        if constraint is not None:
            admissible.append(AdmissibleAxis(axis, constraint))

    return tuple(admissible)


def killing_reduction(target: Union[Geometry, MilnorFrame, H2xRFrame]
                      ) -> Tuple[AdmissibleAxis, ...]:
    """Get the frame axes along which a field can be Killing.

    For a geometry the axes are found symbolically over its whole sign
    pattern, each with the condition on the magnitudes. For a frame the
    unit fields are tested directly and the symbolic condition is attached.

    Args:
        target (`Geometry` | `MilnorFrame` | `H2xRFrame`): The geometry or
            frame.

    Raises:
        TypeError: If `target` has the wrong type.
        UnknownGroupException: If the geometry has no frame here.

    Returns:
        `Tuple[AdmissibleAxis, ...]`: The admissible axes, in order.
    """

    if isinstance(target, Geometry):
        return _symbolic_reduction(target)

    group = geometry_of(target)
    symbolic = {admissible.axis: admissible
                for admissible in _symbolic_reduction(group)}
    sc = target.structure_constants()

    return tuple(
        symbolic.get(axis, AdmissibleAxis(axis)) for axis in range(3)
        if is_killing(sc, LeftInvariantField.basis(axis))
    )


def _text(value: Any) -> str:
    if isinstance(value, (tuple, list)):
        return '(' + ', '.join(_text(entry) for entry in value) + ')'

    if isinstance(value, sympy.Basic):
        return sympy.sstr(value)

    if isinstance(value, float):
        return f'{value:.12g}'

    return str(value)


def _verified(problem: QEProblem, sc: StructureConstants, ric: SymTensor3,
              X: LeftInvariantField, A: Any, axis: Optional[int],
              constraint: str) -> QESolution:
    residual = qe_residual(sc, X, problem.m, A, ric)

    if not residual.is_solution():
        raise SolutionCheckException(
            f'candidate X={X.to_json()}, A={_text(A)} leaves residual '
            f'{_text(residual.sup_norm)}'
        )

    killing = is_killing(sc, X)

    return QESolution(
        X=X,
        A=A,
        residual=float(residual.sup_norm),
        killing=bool(killing),
        axis=axis,
        constraint=constraint,
        provenance=provenance(problem.geometry, axis),
    )


def _frame_tolerance(frame: MilnorFrame, m: Any) -> float:
    if frame.exact and scalar.is_exact_value(m):
        return 0.0

    scale = max([1.0] + [abs(float(value)) for value in frame.lambda_star])

    return config.tolerance('structural') * scale * scale


def _three_axis_record(lambda_star: Tuple[Any, Any, Any],
                       tolerance: float) -> CaseRecord:
    d = tuple((lambda_star[(k + 1) % 3] - lambda_star[(k + 2) % 3]) / 2
              for k in range(3))

    for j in range(3):
        i, k = (j + 1) % 3, (j + 2) % 3
        product = d[i] * d[k]

        if scalar.is_zero(product, tolerance) or product < 0:
            return CaseRecord(
                'X on e1, e2, e3', ELIMINATED,
                f'a{j + 1}^2 = m^2 d{i + 1} d{k + 1} = m^2 * {_text(product)}'
                f' <= 0 with d = {_text(d)}',
            )

    raise SolutionCheckException(f'three axis case not eliminated, d = {d}')


def _solve_milnor(problem: QEProblem) -> SolveReport:
    frame = problem.frame
    m = problem.m
    sc = frame.structure_constants()
    ric = ricci_tensor(sc)
    r = ric.diagonal()
    lam = frame.lambda_star
    tolerance = _frame_tolerance(frame, m)
    symbolic = {admissible.axis: admissible
                for admissible in _symbolic_reduction(frame.group)}

    solutions: List[QESolution] = []
    records: List[CaseRecord] = []

    if all(scalar.is_zero(r[index] - r[0], tolerance) for index in (1, 2)):
        solutions.append(_verified(problem, sc, ric,
                                   LeftInvariantField.zero(), r[0], None,
                                   'none'))
        records.append(CaseRecord('X = 0', SOLUTION,
                                  f'r1 = r2 = r3 = A = {_text(r[0])}'))

    else:
        records.append(CaseRecord('X = 0', ELIMINATED,
                                  f'r1 = r2 = r3 fails, r = {_text(r)}'))

    for axis in range(3):
        i, j = (axis + 1) % 3, (axis + 2) % 3
        case = f'X on e{axis + 1}'
        gap = lam[i] - lam[j]

        if not scalar.is_zero(gap, tolerance):
            records.append(CaseRecord(
                case, ELIMINATED,
                f'(e{i + 1}, e{j + 1}): a{axis + 1} (l{i + 1}* - l{j + 1}*)'
                f' / 2 = 0 with l{i + 1}* - l{j + 1}* = {_text(gap)}',
            ))
            continue

        if not scalar.is_zero(r[i] - r[j], tolerance):
            records.append(CaseRecord(
                case, ELIMINATED,
                f'r{i + 1} = r{j + 1} = A fails, r = {_text(r)}',
            ))
            continue

        square = m * (r[axis] - r[i])
        equation = (f'a{axis + 1}^2 = m (r{axis + 1} - r{i + 1}) = '
                    f'{_text(square)}')

        if scalar.is_zero(square, tolerance):
            records.append(CaseRecord(case, ELIMINATED,
                                      f'{equation} gives X = 0'))
            continue

        if square < 0:
            records.append(CaseRecord(case, ELIMINATED, f'{equation} < 0'))
            continue

        coefficient = scalar.sqrt(square)
        admissible = symbolic.get(axis, AdmissibleAxis(axis))

        for sign in (1, -1):
            solutions.append(_verified(
                problem, sc, ric,
                LeftInvariantField.basis(axis, sign * coefficient), r[i],
                axis, admissible.constraint_text(),
            ))

        records.append(CaseRecord(case, SOLUTION,
                                  f'{equation}, A = r{i + 1} = {_text(r[i])}'))

    for i, j in ((0, 1), (0, 2), (1, 2)):
        records.append(CaseRecord(
            f'X on e{i + 1}, e{j + 1}', ELIMINATED,
            f'(e{i + 1}, e{j + 1}): -a{i + 1} a{j + 1} / m = 0',
        ))

    records.append(_three_axis_record(lam, tolerance))

    for solution in solutions:
        if len(solution.X.support()) > 1:
            raise SolutionCheckException(
                f'solution {solution.X.to_json()} has more than one axis'
            )

    return SolveReport(problem, sorted_solutions(solutions), tuple(records))


def _solve_generic(problem: QEProblem) -> SolveReport:
    sc = problem.structure_constants()
    ric = ricci_tensor(sc)
    a = sympy.symbols('a1:4', real=True)
    A = sympy.Symbol('A', real=True)

    tensor = bakry_emery_tensor(
        BakryEmeryInput.create(sc, LeftInvariantField(a), problem.m, ric)
    ) - SymTensor3.identity(A)

    equations = [sympy.expand(sympy.sympify(value))
                 for value in tensor.entries if not scalar.is_zero(value)]
    found = sympy.solve(equations, list(a) + [A], dict=True)

    solutions: List[QESolution] = []
    records: List[CaseRecord] = []

    for solution in found:
        if any(unknown not in solution for unknown in list(a) + [A]):
            log.warning('Skipping parametric solution', solution)
            continue

        values = [solution[unknown] for unknown in a]

        if any(value.is_real is False for value in values):
            continue

        X = LeftInvariantField(tuple(values))
        A_value = solution[A]

        if A_value.is_Rational:
            A_value = scalar.as_scalar(A_value)

        support = X.support()
        axis = support[0] if len(support) == 1 else None

        verified = _verified(problem, sc, ric, X, A_value, axis, 'none')
        solutions.append(verified)
        records.append(CaseRecord(
            f'X = {_text(X.a)}', SOLUTION,
            f'ric_X^m = A g with A = {_text(A_value)}, killing '
            f'{verified.killing}',
        ))

    if len(records) == 0:
        records.append(CaseRecord(
            'all fields', ELIMINATED,
            f'no real solution of {_text(tuple(equations))} = 0',
        ))

    return SolveReport(problem, sorted_solutions(solutions), tuple(records))


def solve_fixed_metric(frame: Frame, m: Any) -> SolveReport:
    """Find every left-invariant `(X, A)` with `ric_X^m = A g`.

    Milnor frames are solved by the exact case split over the support of
    `X`; rational input gives rational or surd output. The H^2xR preset
    is solved by `sympy.solve` on the full system and may return fields
    that are not Killing.

    Args:
        frame (`MilnorFrame` | `H2xRFrame`): The metric.
        m (`Any`): The nonzero parameter.

    Raises:
        ParameterException: If `m` is zero.
        SolutionCheckException: If a solution fails verification.

    Returns:
        `SolveReport`: The solutions, sorted, and the case records.
    """

    problem = QEProblem(frame, m)

    if isinstance(frame, MilnorFrame):
        report = _solve_milnor(problem)

    else:
        report = _solve_generic(problem)

    log.debug('Solved fixed metric', {
        'group': problem.geometry.value,
        'm': problem.m,
        'solutions': len(report),
    })

    return report
