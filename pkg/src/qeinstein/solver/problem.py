"""Problem, solution and verdict records of the m-quasi Einstein solver."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

import sympy

from qeinstein.algebra import scalar
from qeinstein.algebra.geometry import Geometry
from qeinstein.algebra.milnor import MilnorFrame
from qeinstein.algebra.structure import (
    H2xRFrame,
    LeftInvariantField,
    StructureConstants,
)
from qeinstein.bakry_emery.exception import ParameterException


Frame = Union[MilnorFrame, H2xRFrame]

# Provenance labels of solution families
REFERENCE = 'reference'
SOLVER_DISCOVERED = 'solver-discovered'

# Outcomes of a case record
SOLUTION = 'solution'
ELIMINATED = 'eliminated'


def format_constraint(constraint: Dict[sympy.Symbol, sympy.Expr]) -> str:
    """Get a constraint as `l3 = l2` text, `none` if empty."""

    if len(constraint) == 0:
        return 'none'

    items = sorted(constraint.items(), key=lambda item: str(item[0]))

    return ', '.join(f'{symbol} = {sympy.sstr(value)}'
                     for symbol, value in items)


@dataclass(frozen=True)
class QEProblem:
    """The equation `ric_X^m = A g` on a fixed left-invariant metric."""

    frame: Frame
    m: Any
    A: Optional[Any] = None

    def __post_init__(self):
        if not isinstance(self.frame, (MilnorFrame, H2xRFrame)):
            raise TypeError('frame must be of type MilnorFrame or H2xRFrame')

        if scalar.is_zero(self.m):
            raise ParameterException('m must be nonzero')

        object.__setattr__(self, 'm', scalar.as_scalar(self.m))

    @property
    def geometry(self) -> Geometry:
        """`Geometry`: The geometry of the frame."""

        if isinstance(self.frame, MilnorFrame):
            return self.frame.group

        return self.frame.geometry

    def structure_constants(self) -> StructureConstants:
        """Get the bracket of the frame."""

        return self.frame.structure_constants()


@dataclass(frozen=True)
class CaseRecord:
    """One case of an exhaustive case split.

    Attributes:
        case (`str`): The case, e.g. `X on e3` or `axis e1, signature (+,-,-)`.
        outcome (`str`): `solution` or `eliminated`.
        equation (`str`): The equation deciding the case.
    """

    case: str
    outcome: str
    equation: str

    def to_json(self) -> Dict[str, str]:
        """Get the record as a JSON object."""

        return {
            'case': self.case,
            'outcome': self.outcome,
            'equation': self.equation,
        }


def _exact_text(value: Any) -> str:
    if isinstance(value, sympy.Basic):
        return sympy.sstr(value)

    return str(value)


@dataclass(frozen=True)
class QESolution:
    """A solution `(X, A)` on a fixed metric.

    Attributes:
        X (`LeftInvariantField`): The field.
        A (`Any`): The Einstein constant.
        residual (`float`): Sup norm of `ric_X^m - A g`.
        killing (`bool`): Whether `X` is a Killing field.
        axis (`int`, optional): The frame axis carrying `X`, None for
            `X = 0` or a field off the axes.
        constraint (`str`): Conditions on the metric, `none` if free.
        provenance (`str`): `reference` or `solver-discovered`.
    """

    X: LeftInvariantField
    A: Any
    residual: float
    killing: bool
    axis: Optional[int] = None
    constraint: str = 'none'
    provenance: str = REFERENCE

    @property
    def is_trivial(self) -> bool:
        """`bool`: Whether `X = 0`."""

        return len(self.X.support()) == 0

    def sort_key(self) -> Tuple[float, ...]:
        """Get a key ordering solutions canonically."""

        return (float(self.A),) + tuple(float(value) for value in self.X.a)

    def to_json(self) -> Dict[str, Any]:
        """Get the solution as a JSON object."""

        return {
            'X': self.X.to_json(),
            'A': scalar.to_json_number(self.A),
            'residual': float(self.residual),
            'killing': self.killing,
            'constraint': self.constraint,
            'provenance': self.provenance,
            'exact': {
                'X': [_exact_text(value) for value in self.X.a],
                'A': _exact_text(self.A),
            },
        }


@dataclass(frozen=True)
class SolveReport:
    """All solutions on a fixed metric with the case split behind them."""

    problem: QEProblem
    solutions: Tuple[QESolution, ...]
    certificates: Tuple[CaseRecord, ...]

    def __iter__(self) -> Iterator[QESolution]:
        return iter(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)

    def nontrivial(self) -> Tuple[QESolution, ...]:
        """Get the solutions with `X != 0`."""

        return tuple(solution for solution in self.solutions
                     if not solution.is_trivial)

    def to_json(self, certify: bool = True) -> Dict[str, Any]:
        """Get the report as a JSON object.

        Args:
            certify (`bool`, optional): Whether to include the case
                records. Defaults to True.
        """

        data = dict(self.problem.frame.to_json())
        data['m'] = scalar.to_json_number(self.problem.m)
        data['solutions'] = [solution.to_json()
                             for solution in self.solutions]

        if certify:
            data['certificates'] = [record.to_json()
                                    for record in self.certificates]

        return data


@dataclass(frozen=True)
class QESolutionFamily:
    """A family of solutions over a region of metrics.

    On the family `a_axis^2 = m * coefficient_squared` and `A = A`, both
    expressions in the positive magnitude symbols, subject to
    `constraint`.

    Attributes:
        group (`Geometry`): The geometry.
        axis (`int`, optional): The axis carrying `X`, None for `X = 0`.
        coefficient_squared (`sympy.Expr`): `a_axis^2 / m`.
        A (`sympy.Expr`): The Einstein constant.
        constraint (`Dict[sympy.Symbol, sympy.Expr]`): Substitutions that
            put the metric on the family.
        provenance (`str`): `reference` or `solver-discovered`.
        killing (`bool`): Whether the family consists of Killing fields.
    """

    group: Geometry
    axis: Optional[int]
    coefficient_squared: sympy.Expr
    A: sympy.Expr
    constraint: Dict[sympy.Symbol, sympy.Expr] = field(default_factory=dict)
    provenance: str = REFERENCE
    killing: bool = True

    def constraint_text(self) -> str:
        """Get the constraint as text, `none` if unconstrained."""

        return format_constraint(self.constraint)

    def instantiate(self, values: Dict[sympy.Symbol, Any], m: Any
                    ) -> Tuple[sympy.Expr, sympy.Expr]:
        """Evaluate the family at a metric on its constraint.

        Args:
            values (`Dict[sympy.Symbol, Any]`): Values of the free magnitude
                symbols.
            m (`Any`): The parameter.

        Returns:
            `Tuple[sympy.Expr, sympy.Expr]`: `a_axis^2` and `A`.
        """

        substitutions = {symbol: scalar.to_sympy(value)
                         for symbol, value in values.items()}

        def evaluate(expression: sympy.Expr) -> sympy.Expr:
            return sympy.simplify(sympy.sympify(expression)
                                  .subs(self.constraint).subs(substitutions))

        return (evaluate(scalar.to_sympy(m) * self.coefficient_squared),
                evaluate(self.A))

    def describe(self) -> str:
        """Get a one line description."""

        if self.axis is None:
            field_text = 'X = 0'

        else:
            squared = sympy.sstr(self.coefficient_squared)
            field_text = (f'X = +-sqrt(m * ({squared}))'
                          f' e{self.axis + 1}')

        return (f'{field_text}, A = {sympy.sstr(self.A)}, constraint '
                f'{self.constraint_text()} [{self.provenance}]')

    def to_json(self) -> Dict[str, Any]:
        """Get the family as a JSON object."""

        return {
            'axis': None if self.axis is None else self.axis + 1,
            'coefficient_squared_over_m': sympy.sstr(self.coefficient_squared),
            'A': sympy.sstr(self.A),
            'constraint': self.constraint_text(),
            'provenance': self.provenance,
            'killing': self.killing,
        }


class Verdict(Enum):
    """The verdict of a sign cell."""

    EXISTS = 'Exists'
    TRIVIAL_ONLY = 'Trivial'
    NONE = 'None'


# Sign of m and of A, -1, 0 or 1
SignCell = Tuple[int, int]


@dataclass(frozen=True)
class Witness:
    """A numerically confirmed solution inside a sign cell.

    Attributes:
        frame (`Dict[str, Any]`): The frame JSON.
        m (`Any`): The parameter.
        solution (`QESolution`): The confirmed solution.
        confirmed_draws (`int`): Random draws confirmed by the fixed
            metric solver.
    """

    frame: Dict[str, Any]
    m: Any
    solution: QESolution
    confirmed_draws: int = 0

    def to_json(self) -> Dict[str, Any]:
        """Get the witness as a JSON object."""

        return {
            **self.frame,
            'm': scalar.to_json_number(self.m),
            **self.solution.to_json(),
            'confirmed_draws': self.confirmed_draws,
        }


@dataclass(frozen=True)
class CellVerdict:
    """The verdict of one `(geometry, sign m, sign A)` cell.

    Attributes:
        group (`Geometry`): The geometry.
        sign_m (`int`): The sign of m, 1 or -1.
        sign_A (`int`): The sign of A.
        verdict (`Verdict`): The verdict.
        families (`Tuple[QESolutionFamily, ...]`): Families meeting the
            cell.
        witnesses (`Tuple[Witness, ...]`): Numeric witnesses.
        certificate (`Tuple[CaseRecord, ...]`): The case records.
        reasoning (`Tuple[str, ...]`): Rules applied, for model spaces.
    """

    group: Geometry
    sign_m: int
    sign_A: int
    verdict: Verdict
    families: Tuple[QESolutionFamily, ...] = ()
    witnesses: Tuple[Witness, ...] = ()
    certificate: Tuple[CaseRecord, ...] = ()
    reasoning: Tuple[str, ...] = ()

    @property
    def cell(self) -> Tuple[Geometry, int, int]:
        """`Tuple[Geometry, int, int]`: The cell key."""

        return (self.group, self.sign_m, self.sign_A)

    def to_json(self, certify: bool = True) -> Dict[str, Any]:
        """Get the verdict as a JSON object."""

        data: Dict[str, Any] = {
            'group': self.group.value,
            'sign_m': self.sign_m,
            'sign_A': self.sign_A,
            'verdict': self.verdict.value,
            'families': [family.to_json() for family in self.families],
            'witnesses': [witness.to_json() for witness in self.witnesses],
        }

        if len(self.reasoning) > 0:
            data['reasoning'] = list(self.reasoning)

        if certify:
            data['certificate'] = [record.to_json()
                                   for record in self.certificate]

        return data


def sign_label(sign: int) -> str:
    """Get `>0`, `=0` or `<0` for a sign."""

    return {1: '>0', 0: '=0', -1: '<0'}[sign]


def sorted_solutions(solutions: List[QESolution]
                     ) -> Tuple[QESolution, ...]:
    """Sort solutions canonically."""

    return tuple(sorted(solutions, key=QESolution.sort_key))
