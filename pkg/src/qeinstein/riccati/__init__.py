"""Provides global analysis of the scalar Riccati equation
`f' - f^2 / m = lambda`."""

from qeinstein.riccati.equation import (
    RiccatiClassification,
    RiccatiKind,
    RiccatiProblem,
    blow_up_time,
    classify_global,
    closed_form_expression,
    evaluate_closed_form,
    ode_residual,
)
from qeinstein.riccati.oracle import Trajectory, default_span, rk4_oracle
from qeinstein.riccati.transport import (
    GeodesicTransport,
    TransportVerdict,
    transport_verdict,
)


__all__ = [
    'RiccatiClassification',
    'RiccatiKind',
    'RiccatiProblem',
    'blow_up_time',
    'classify_global',
    'closed_form_expression',
    'evaluate_closed_form',
    'ode_residual',
    'Trajectory',
    'default_span',
    'rk4_oracle',
    'GeodesicTransport',
    'TransportVerdict',
    'transport_verdict',
]
