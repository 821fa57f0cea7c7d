"""Multi-start least squares search for solutions, independent of the case
split."""

from dataclasses import dataclass
from typing import Any, List, Optional, Tuple

import numpy as np
from scipy.optimize import least_squares

from qeinstein.algebra import scalar
from qeinstein.bakry_emery.exception import ParameterException
from qeinstein.curvature import ricci_tensor
from qeinstein.curvature.tensor import ENTRY_INDICES
from qeinstein.solver.problem import Frame, QESolution, SolveReport
from qeinstein.util import config, log


@dataclass(frozen=True)
class OracleCluster:
    """Converged starts that agree within the cluster tolerance.

    Attributes:
        X (`Tuple[float, float, float]`): Mean field coefficients.
        A (`float`): Mean Einstein constant.
        residual (`float`): Largest residual in the cluster.
        count (`int`): Number of starts in the cluster.
    """

    X: Tuple[float, float, float]
    A: float
    residual: float
    count: int

    def to_json(self) -> dict:
        return {
            'X': list(self.X),
            'A': self.A,
            'residual': self.residual,
            'count': self.count,
        }


@dataclass(frozen=True)
class OracleResult:
    """The clusters found from `starts` random starting points."""

    clusters: Tuple[OracleCluster, ...]
    starts: int
    converged: int

    def __iter__(self):
        return iter(self.clusters)

    def __len__(self) -> int:
        return len(self.clusters)


@dataclass(frozen=True)
class Discrepancy:
    """A solution seen by only one of the case split and the oracle.

    Attributes:
        kind (`str`): `missing` when the oracle did not reach a case split
            solution, `extra` when the case split has no such solution.
        X (`Tuple[float, float, float]`): The field.
        A (`float`): The Einstein constant.
    """

    kind: str
    X: Tuple[float, float, float]
    A: float

    def to_json(self) -> dict:
        return {'kind': self.kind, 'X': list(self.X), 'A': self.A}


def _residual_function(frame: Frame, m: float):
    sc = frame.structure_constants()
    c = scalar.to_float_array(sc.c)
    ric = ricci_tensor(sc).to_float().matrix()
    rows, columns = zip(*ENTRY_INDICES)

    def residual(point: np.ndarray) -> np.ndarray:
        a, A = point[:3], point[3]
        ad = np.einsum('k,jki->ji', a, c)
        tensor = ric - (ad + ad.T) / 2 - np.outer(a, a) / m - A * np.eye(3)

        return tensor[rows, columns]

    return residual


def _start_radius(frame: Frame, m: float) -> float:
    values = np.abs(scalar.to_float_array(frame.structure_constants().c))

    return 2.0 * (1.0 + float(values.max())) * max(1.0, abs(m) ** 0.5)


def numeric_oracle(frame: Frame, m: Any, n_starts: Optional[int] = None,
                   seed: Optional[int] = None) -> OracleResult:
    """Search for solutions with damped least squares from random starts.

    Each start minimizes the six entries of `ric_X^m - A g` over
    `(a_1, a_2, a_3, A)` with Levenberg-Marquardt. Starts ending above the
    solution tolerance are discarded, the rest are clustered.

    Args:
        frame (`MilnorFrame` | `H2xRFrame`): The metric.
        m (`Any`): The nonzero parameter.
        n_starts (`int`, optional): Number of starts. Defaults to the
            configured `oracle_starts`.
        seed (`int`, optional): Seed of the starts. Defaults to the
            configured `seed`.

    Raises:
        ParameterException: If `m` is zero.

    Returns:
        `OracleResult`: The clusters sorted by `(A, a_1, a_2, a_3)`.
    """

    m = float(m)

    if m == 0:
        raise ParameterException('m must be nonzero')

    if n_starts is None:
        n_starts = int(config.get('oracle_starts'))

    if seed is None:
        seed = int(config.get('seed'))

    solution_tolerance = config.tolerance('solution')
    cluster_tolerance = config.tolerance('cluster')

    residual = _residual_function(frame, m)
    radius = _start_radius(frame, m)
    rng = np.random.default_rng(seed)

    points: List[Tuple[np.ndarray, float]] = []

    for _ in range(n_starts):
        start = rng.uniform(-radius, radius, size=4)
        result = least_squares(residual, start, method='lm', xtol=1e-15,
                               ftol=1e-15, gtol=1e-15)
        size = float(np.abs(residual(result.x)).max())

        if size < solution_tolerance:
            points.append((result.x, size))

    clusters: List[List[Tuple[np.ndarray, float]]] = []

    for point, size in points:
        for cluster in clusters:
            if np.abs(cluster[0][0] - point).max() < cluster_tolerance:
                cluster.append((point, size))
                break

        else:
            clusters.append([(point, size)])

    found = []

    for cluster in clusters:
        mean = np.mean([point for point, _ in cluster], axis=0)
        mean[np.abs(mean) < cluster_tolerance] = 0.0

        found.append(OracleCluster(
            X=tuple(float(value) for value in mean[:3]),
            A=float(mean[3]),
            residual=max(size for _, size in cluster),
            count=len(cluster),
        ))

    found.sort(key=lambda cluster: (cluster.A,) + cluster.X)

    log.debug('Oracle finished', {
        'starts': n_starts,
        'converged': len(points),
        'clusters': len(found),
    })

    return OracleResult(tuple(found), n_starts, len(points))


def _matches(solution: QESolution, cluster: OracleCluster,
             tolerance: float) -> bool:
    expected = [float(value) for value in solution.X.a] + [float(solution.A)]
    seen = list(cluster.X) + [cluster.A]

    return max(abs(left - right) for left, right in zip(expected, seen)) \
        < tolerance * max(1.0, max(abs(value) for value in expected))


def compare_with_oracle(report: SolveReport, oracle: OracleResult,
                        killing_only: bool = False
                        ) -> Tuple[Discrepancy, ...]:
    """List the solutions found by only one of the two methods.

    Args:
        report (`SolveReport`): The case split solutions.
        oracle (`OracleResult`): The oracle clusters of the same problem.
        killing_only (`bool`, optional): Whether to ignore report
            solutions that are not Killing. Defaults to False.

    Returns:
        `Tuple[Discrepancy, ...]`: Missing then extra solutions.
    """

    tolerance = config.tolerance('cluster')
    solutions = [solution for solution in report
                 if solution.killing or not killing_only]
    discrepancies = []

    for solution in solutions:
        if not any(_matches(solution, cluster, tolerance)
                   for cluster in oracle):
            discrepancies.append(Discrepancy(
                'missing',
                tuple(float(value) for value in solution.X.a),
                float(solution.A),
            ))

    for cluster in oracle:
        if not any(_matches(solution, cluster, tolerance)
                   for solution in solutions):
            discrepancies.append(Discrepancy('extra', cluster.X, cluster.A))

    for discrepancy in discrepancies:
        log.warning('Oracle discrepancy', discrepancy.to_json())

    return tuple(discrepancies)
