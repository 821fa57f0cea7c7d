"""Fixed step RK4 integration of the Riccati equation, used to check the
closed forms independently."""

import csv
import math
from dataclasses import dataclass
from typing import Optional, TextIO, Tuple

import numpy as np

from qeinstein.riccati.equation import RiccatiProblem, blow_up_time
from qeinstein.riccati.exception import ParameterException
from qeinstein.util import config, log


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Sampled values of one integration.

    Attributes:
        times (`np.ndarray`): Increasing sample times.
        values (`np.ndarray`): `f` at each time.
        blew_up (`bool`): Whether `|f|` left the blow up bound.
        blow_up_time (`float`, optional): Time at which the bound was
            first exceeded, confirmed with half the step.
    """

    times: np.ndarray
    values: np.ndarray
    blew_up: bool = False
    blow_up_time: Optional[float] = None

    def to_csv(self, stream: TextIO):
        """Write `t,f` rows, one per sample, with a header."""

        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(('t', 'f'))

        for time, value in zip(self.times, self.values):
            writer.writerow((f'{time:.12g}', f'{value:.12g}'))


def _integrate(problem: RiccatiProblem, end: float, step: float,
               bound: float) -> Tuple[np.ndarray, np.ndarray,
                                      Optional[float]]:
    count = int(math.ceil(abs(end) / step - 1e-9))
    h = math.copysign(step, end) if end != 0 else step

    times = [0.0]
    values = [problem.f0]
    value = problem.f0

    for index in range(count):
        k1 = problem.rhs(value)
        k2 = problem.rhs(value + h / 2 * k1)
        k3 = problem.rhs(value + h / 2 * k2)
        k4 = problem.rhs(value + h * k3)

        value = value + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        time = (index + 1) * h

        if not math.isfinite(value) or abs(value) > bound:
            return np.array(times), np.array(values), time

        times.append(time)
        values.append(value)

    return np.array(times), np.array(values), None


# Default window end, widened up to MAX_SPAN_END to reach a forward pole
SPAN_END = 5.0

MAX_SPAN_END = 100.0


def default_span(problem: RiccatiProblem) -> Tuple[float, float]:
    """Get `(0, SPAN_END)`, extended past the forward pole of `problem`.

    Args:
        problem (`RiccatiProblem`): A problem with `f0`.

    Returns:
        `Tuple[float, float]`: The integration window.
    """

    pole = blow_up_time(problem)

    if pole is None or not pole > 0 or 1.25 * pole <= SPAN_END:
        return (0.0, SPAN_END)

    if 1.25 * pole > MAX_SPAN_END:
        log.warning('Pole lies beyond the integration window',
                    {'pole': pole, 'end': MAX_SPAN_END})

        return (0.0, MAX_SPAN_END)

    return (0.0, 1.25 * pole)


def rk4_oracle(problem: RiccatiProblem,
               t_span: Optional[Tuple[float, float]] = None,
               step: float = 1e-3) -> Trajectory:
    """Integrate from `f(0) = f0` over `t_span` with classical RK4.

    The interval is integrated outwards from 0 in both directions. A blow
    up is flagged when `|f|` exceeds the configured `blow_up` bound or
    stops being finite, and is accepted only if the integration with half
    the step blows up as well.

    Args:
        problem (`RiccatiProblem`): A problem with `f0`.
        t_span (`Tuple[float, float]`, optional): The interval, which must
            contain 0. Defaults to `default_span(problem)`.
        step (`float`, optional): The step size. Defaults to 1e-3.

    Raises:
        ParameterException: If `f0` is unset, `step <= 0` or `t_span` does
            not contain 0.

    Returns:
        `Trajectory`: The samples up to the interval ends or the blow up.
    """

    if problem.f0 is None:
        raise ParameterException('f0 must be set to integrate')

    if not step > 0:
        raise ParameterException('step must be positive')

    if t_span is None:
        t_span = default_span(problem)

    start, end = (float(value) for value in t_span)

    if not start <= 0 <= end:
        raise ParameterException(f't_span {t_span} must contain 0')

    bound = config.tolerance('blow_up')

    back_times, back_values, back_blow_up = _integrate(problem, start, step,
                                                       bound)
    times, values, blow_up = _integrate(problem, end, step, bound)

    candidates = [time for time in (back_blow_up, blow_up)
                  if time is not None]
    confirmed = None

    for candidate in candidates:
        _, _, check = _integrate(problem, candidate * 2, step / 2, bound)

        if check is None:
            log.warning('Blow up not confirmed with half step', candidate)
            continue

        if confirmed is None or abs(check) < abs(confirmed):
            confirmed = check

    all_times = np.concatenate((back_times[:0:-1], times))
    all_values = np.concatenate((back_values[:0:-1], values))

    return Trajectory(all_times, all_values, confirmed is not None,
                      confirmed)
