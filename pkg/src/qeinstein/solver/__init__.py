"""Provides the m-quasi Einstein solver on Lie group geometries."""

from qeinstein.solver.problem import (
    ELIMINATED,
    REFERENCE,
    SOLUTION,
    SOLVER_DISCOVERED,
    CaseRecord,
    CellVerdict,
    QEProblem,
    QESolution,
    QESolutionFamily,
    SolveReport,
    Verdict,
    Witness,
    sign_label,
)
from qeinstein.solver.fixed import (
    AdmissibleAxis,
    killing_reduction,
    provenance,
    solve_fixed_metric,
)
from qeinstein.solver.families import (
    GroupAnalysis,
    Region,
    analyse,
    classify_cell,
    derive_families,
)
from qeinstein.solver.oracle import (
    Discrepancy,
    OracleCluster,
    OracleResult,
    compare_with_oracle,
    numeric_oracle,
)


__all__ = [
    'ELIMINATED',
    'REFERENCE',
    'SOLUTION',
    'SOLVER_DISCOVERED',
    'CaseRecord',
    'CellVerdict',
    'QEProblem',
    'QESolution',
    'QESolutionFamily',
    'SolveReport',
    'Verdict',
    'Witness',
    'sign_label',
    'AdmissibleAxis',
    'killing_reduction',
    'provenance',
    'solve_fixed_metric',
    'GroupAnalysis',
    'Region',
    'analyse',
    'classify_cell',
    'derive_families',
    'Discrepancy',
    'OracleCluster',
    'OracleResult',
    'compare_with_oracle',
    'numeric_oracle',
]
