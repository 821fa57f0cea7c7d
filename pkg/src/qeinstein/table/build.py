"""Computation of the classification table and its comparison with the
reference."""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, Optional, Tuple, Union

from qeinstein.algebra import scalar
from qeinstein.algebra.geometry import Geometry
from qeinstein.products import (
    EinsteinFactor,
    ProductVerdict,
    assemble_product_tensors,
    product_cell,
    space_form_cell,
)
from qeinstein.run_config import RunConfig
from qeinstein.solver import CellVerdict, Verdict, classify_cell, sign_label
from qeinstein.table.reference import (
    CELL_ORDER,
    GEOMETRY_ORDER,
    REFERENCE_TABLE,
    ReferenceCell,
)
from qeinstein.util import log


CellKey = Tuple[Geometry, int, int]

# Factors of the product geometries
S2XR_FACTORS = (EinsteinFactor.sphere(2, 1), EinsteinFactor.line())

H3_RHO = 1


@dataclass(frozen=True)
class TableCell:
    """One computed cell.

    Attributes:
        group (`Geometry`): The geometry.
        sign_m (`int`): The sign of m.
        sign_A (`int`): The sign of A.
        result (`CellVerdict` | `ProductVerdict`): The solver or product
            verdict behind the cell.
        witness (`Dict[str, Any]`, optional): A numeric witness of an
            Exists cell from the product blocks.
    """

    group: Geometry
    sign_m: int
    sign_A: int
    result: Union[CellVerdict, ProductVerdict]
    witness: Optional[Dict[str, Any]] = None

    @property
    def verdict(self) -> Verdict:
        """`Verdict`: The verdict of the cell."""

        return self.result.verdict

    @property
    def has_witness(self) -> bool:
        """`bool`: Whether the cell carries a numeric witness."""

        if self.witness is not None:
            return True

        return isinstance(self.result, CellVerdict) \
            and len(self.result.witnesses) > 0

    def to_json(self, certify: bool = True) -> Dict[str, Any]:
        """Get the cell as a JSON object."""

        if isinstance(self.result, CellVerdict):
            return self.result.to_json(certify)

        data = {
            'group': self.group.value,
            'sign_m': self.sign_m,
            'sign_A': self.sign_A,
            **self.result.to_json(),
        }

        if self.witness is not None:
            data['witnesses'] = [self.witness]

        return data


@dataclass(frozen=True)
class ClassificationTable:
    """The verdicts of every geometry and sign cell."""

    cells: Dict[CellKey, TableCell]

    def __iter__(self) -> Iterator[TableCell]:
        for group in GEOMETRY_ORDER:
            for sign_m, sign_A in CELL_ORDER:
                yield self.cells[(group, sign_m, sign_A)]

    def __len__(self) -> int:
        return len(self.cells)

    def cell(self, group: Union[Geometry, str], sign_m: int,
             sign_A: int) -> TableCell:
        """Get a cell.

        Raises:
            KeyError: If the cell is not in the table.
        """

        if isinstance(group, str):
            group = Geometry.from_name(group)

        return self.cells[(group, sign_m, sign_A)]

    def verdict(self, group: Union[Geometry, str], sign_m: int,
                sign_A: int) -> Verdict:
        """Get the verdict of a cell."""

        return self.cell(group, sign_m, sign_A).verdict

    def row(self, group: Geometry) -> Tuple[TableCell, ...]:
        """Get the cells of `group` in column order."""

        return tuple(self.cells[(group, sign_m, sign_A)]
                     for sign_m, sign_A in CELL_ORDER)


def _product_witness(verdict: ProductVerdict, sign_m: int
                     ) -> Optional[Dict[str, Any]]:
    if verdict.verdict != Verdict.EXISTS:
        return None

    factor = S2XR_FACTORS[0]
    tensors = assemble_product_tensors(factor, verdict.coefficient, sign_m,
                                       verdict.A)

    return {
        'factor': factor.to_json(),
        'm': sign_m,
        'A': scalar.to_json_number(verdict.A),
        'coefficient': scalar.to_json_number(verdict.coefficient),
        'residual': tensors.residual,
    }


def compute_cell(group: Union[Geometry, str], sign_m: int, sign_A: int,
                 witness_draws: Optional[int] = None,
                 seed: Optional[int] = None) -> TableCell:
    """Compute one cell, by the solver on Lie groups and by the product
    rules on `S^2xR` and `H^3`.

    Args:
        group (`Geometry` | `str`): The geometry.
        sign_m (`int`): The sign of m.
        sign_A (`int`): The sign of A.
        witness_draws (`int`, optional): Draws confirming a witness.
        seed (`int`, optional): Seed of the draws.

    Returns:
        `TableCell`: The cell.
    """

    if isinstance(group, str):
        group = Geometry.from_name(group)

    if group == Geometry.S2XR:
        verdict = product_cell(*S2XR_FACTORS, sign_m, sign_A,
                               compact_quotient=True)

        return TableCell(group, sign_m, sign_A, verdict,
                         _product_witness(verdict, sign_m))

    if group == Geometry.H3:
        return TableCell(group, sign_m, sign_A,
                         space_form_cell(H3_RHO, sign_m, sign_A))

    return TableCell(group, sign_m, sign_A,
                     classify_cell(group, sign_m, sign_A, witness_draws,
                                   seed))


def build_table(run_config: Optional[RunConfig] = None
                ) -> ClassificationTable:
    """Compute every cell of the classification table.

    Cells are computed one after another in table order.

    Args:
        run_config (`RunConfig`, optional): The run options. Defaults to
            the loaded config.

    Returns:
        `ClassificationTable`: The table.
    """

    if run_config is None:
        run_config = RunConfig()

    cells = {}

    for group in GEOMETRY_ORDER:
        for sign_m, sign_A in CELL_ORDER:
            cells[(group, sign_m, sign_A)] = compute_cell(
                group, sign_m, sign_A, run_config.witness_draws,
                run_config.seed)

        log.info('Computed row', group.display_name)

    return ClassificationTable(cells)


@dataclass(frozen=True)
class Mismatch:
    """A cell whose computed verdict differs from the reference."""

    group: Geometry
    sign_m: int
    sign_A: int
    expected: Verdict
    computed: Verdict
    disputed: bool

    def describe(self) -> str:
        text = (f'{self.group.display_name} m{sign_label(self.sign_m)} '
                f'A{sign_label(self.sign_A)}: expected '
                f'{self.expected.value}, computed {self.computed.value}')

        if self.disputed:
            text += ' (disputed)'

        return text

    def to_json(self) -> Dict[str, Any]:
        return {
            'group': self.group.value,
            'sign_m': self.sign_m,
            'sign_A': self.sign_A,
            'expected': self.expected.value,
            'computed': self.computed.value,
            'disputed': self.disputed,
        }


@dataclass(frozen=True)
class TableDiff:
    """The mismatches between a computed table and the reference."""

    mismatches: Tuple[Mismatch, ...]

    @property
    def exit_code(self) -> int:
        """`int`: 0 on a full match, 2 when only disputed cells differ and
        1 otherwise."""

        if len(self.mismatches) == 0:
            return 0

        if all(mismatch.disputed for mismatch in self.mismatches):
            return 2

        return 1

    def to_json(self) -> Dict[str, Any]:
        return {
            'exit_code': self.exit_code,
            'mismatches': [mismatch.to_json()
                           for mismatch in self.mismatches],
        }


def diff(table: ClassificationTable,
         reference: Optional[Dict[CellKey, ReferenceCell]] = None
         ) -> TableDiff:
    """Compare `table` with the reference table.

    Args:
        table (`ClassificationTable`): The computed table.
        reference (`Dict`, optional): The expected cells. Defaults to
            `REFERENCE_TABLE`.

    Returns:
        `TableDiff`: The mismatches in table order.
    """

    if reference is None:
        reference = REFERENCE_TABLE

    mismatches = []

    for cell in table:
        expected = reference[(cell.group, cell.sign_m, cell.sign_A)]

        if expected.verdict != cell.verdict:
            mismatches.append(Mismatch(cell.group, cell.sign_m, cell.sign_A,
                                       expected.verdict, cell.verdict,
                                       expected.disputed))

    for mismatch in mismatches:
        if mismatch.disputed:
            log.info('Disputed cell differs', mismatch.describe())

        else:
            log.warning('Cell differs from the reference',
                        mismatch.describe())

    return TableDiff(tuple(mismatches))
