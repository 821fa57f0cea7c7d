"""The `qeinstein` command line.

Subcommands:
    table: Regenerate the classification table and compare it with the
        reference. Exits 0 on a full match, 2 when only disputed cells
        differ and 1 otherwise.
    solve: Solve one metric, or one sign cell with `--m-sign` and
        `--a-sign`.
    riccati: Classify `f' - f^2 / m = lambda`, optionally integrating it.

Malformed arguments exit with 64.
"""

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

from qeinstein.algebra import H2xRFrame, MilnorFrame
from qeinstein.algebra.exception import (
    InvalidSignPatternException,
    NotUnimodularException,
)
from qeinstein.algebra.geometry import Geometry
from qeinstein.bakry_emery.exception import \
    ParameterException as SolverParameterException
from qeinstein.products import EinsteinFactor, product_qe, \
    space_form_verdict
from qeinstein.products.exception import \
    ParameterException as ProductParameterException
from qeinstein.riccati import RiccatiProblem, classify_global, rk4_oracle
from qeinstein.riccati.exception import \
    ParameterException as RiccatiParameterException
from qeinstein.run_config import A_SIGNS, M_SIGNS, OUTPUT_FORMATS, RunConfig
from qeinstein.solver import SolveReport, compare_with_oracle, \
    numeric_oracle, solve_fixed_metric
from qeinstein.table import build_table, compute_cell, diff, render_csv, \
    render_json, render_markdown
from qeinstein.util import config, log
from qeinstein.util.exception import UsageException


EXIT_USAGE = 64

EXIT_ERROR = 1

# Errors caused by the arguments rather than by the computation
USAGE_ERRORS = (
    UsageException,
    InvalidSignPatternException,
    NotUnimodularException,
    SolverParameterException,
    ProductParameterException,
    RiccatiParameterException,
)


class ArgumentParser(argparse.ArgumentParser):
    """An argument parser raising `UsageException` instead of exiting."""

    def error(self, message: str):
        raise UsageException(message)


def _number(text: str) -> Fraction:
    try:
        return Fraction(text.strip())

    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f'not a number: "{text}"') \
            from None


def _numbers(text: str) -> Tuple[Fraction, ...]:
    return tuple(_number(value) for value in text.split(','))


def _flatten(groups: Optional[List[Tuple[Fraction, ...]]]
             ) -> Optional[Tuple[Fraction, ...]]:
    if groups is None:
        return None

    return tuple(value for group in groups for value in group)


def _interval(text: str) -> Tuple[float, float]:
    values = _numbers(text)

    if len(values) != 2:
        raise argparse.ArgumentTypeError(f'expected a,b, got "{text}"')

    return (float(values[0]), float(values[1]))


def build_parser() -> ArgumentParser:
    """Create the argument parser of every subcommand."""

    parser = ArgumentParser(
        prog='qeinstein',
        description='Verify m-quasi Einstein metrics on the model '
                    '3-geometries.',
    )
    parser.add_argument('--config', help='path of an INI config file')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', action='store_true',
                           help='log at debug level')
    verbosity.add_argument('--quiet', action='store_true',
                           help='log nothing')

    common = ArgumentParser(add_help=False)
    common.add_argument('--format', dest='output_format',
                        choices=OUTPUT_FORMATS)
    common.add_argument('--tolerance', type=float,
                        help='solution tolerance, in (0, 1e-4)')
    common.add_argument('--seed', type=int)
    common.add_argument('--certify', action='store_true',
                        help='include the case records')

    subparsers = parser.add_subparsers(dest='command', required=True)

    table = subparsers.add_parser('table', parents=[common],
                                  help='regenerate the classification table')
    table.add_argument('--witness-draws', type=int)

    solve = subparsers.add_parser('solve', parents=[common],
                                  help='solve one metric or sign cell')
    solve.add_argument('--group', required=True,
                       choices=[geometry.value for geometry in Geometry])
    solve.add_argument('--lambda', dest='lambda_star', type=_numbers,
                       nargs='+', metavar='L',
                       help='structure constants as l1 l2 l3 or l1,l2,l3; '
                            'a comma list starting with a minus sign needs '
                            '--lambda=-1,1,1')
    solve.add_argument('--m', type=_number)
    solve.add_argument('--m-sign', choices=tuple(M_SIGNS))
    solve.add_argument('--a-sign', choices=tuple(A_SIGNS))
    solve.add_argument('--rho', type=_number,
                       help='curvature scale of s2xr, h3 and h2xr')
    solve.add_argument('--oracle', action='store_true',
                       help='cross check with random least squares starts')

    riccati = subparsers.add_parser('riccati', parents=[common],
                                    help="classify f' - f^2 / m = lambda")
    riccati.add_argument('--lambda', dest='lam', type=_number,
                         required=True)
    riccati.add_argument('--m', type=_number, default=Fraction(1))
    riccati.add_argument('--f0', type=_number)
    riccati.add_argument('--integrate', action='store_true',
                         help='emit an RK4 trajectory as CSV')
    riccati.add_argument('--t-span', type=_interval,
                         help='window a,b containing 0, e.g. --t-span=-1,2; '
                              'defaults to 0,5 extended past a forward pole')
    riccati.add_argument('--step', type=float, default=1e-3)

    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig({
        'group': getattr(args, 'group', None),
        'lambda_star': _flatten(getattr(args, 'lambda_star', None)),
        'm': getattr(args, 'm', None),
        'm_sign': getattr(args, 'm_sign', None),
        'a_sign': getattr(args, 'a_sign', None),
        'rho': getattr(args, 'rho', None),
        'tolerance': args.tolerance,
        'output_format': args.output_format,
        'seed': args.seed,
        'witness_draws': getattr(args, 'witness_draws', None),
        'certify': args.certify or None,
    })


def cmd_table(args: argparse.Namespace, run_config: RunConfig,
              stream: TextIO) -> int:
    """Write the classification table and its diff.

    Returns:
        `int`: The exit code of the diff.
    """

    table = build_table(run_config)
    table_diff = diff(table)
    output_format = run_config.output_format

    if output_format == 'json':
        stream.write(render_json(table, table_diff, run_config.certify))

    elif output_format == 'csv':
        stream.write(render_csv(table))

    else:
        stream.write(render_markdown(table, table_diff))

    return table_diff.exit_code


def _format_value(value: Any) -> str:
    if isinstance(value, list):
        return '(' + ', '.join(_format_value(entry) for entry in value) + ')'

    return str(value)


def _render_report(report: SolveReport, certify: bool) -> str:
    data = report.to_json(certify)
    frame = ', '.join(f'{key} = {_format_value(value)}'
                      for key, value in data.items()
                      if key not in ('solutions', 'certificates'))
    lines = [f'# {report.problem.geometry.display_name}: {frame}', '']

    for solution in data['solutions']:
        lines.append(f"- X = {_format_value(solution['exact']['X'])}, "
                     f"A = {solution['exact']['A']}, killing "
                     f"{'yes' if solution['killing'] else 'no'}, residual "
                     f"{solution['residual']:.3g} [{solution['provenance']}]")

    if len(data['solutions']) == 0:
        lines.append('- no solutions')

    if certify:
        lines.extend(['', 'Cases:', ''])
        lines.extend(f"- {record['case']}: {record['outcome']} "
                     f"({record['equation']})"
                     for record in data['certificates'])

    return '\n'.join(lines) + '\n'


def _render_verdict(title: str, data: Dict[str, Any]) -> str:
    lines = [f'# {title}', '', f"Verdict: {data['verdict']}"]

    if data.get('A') is not None:
        lines.append(f"A = {data['A']}")

    if 'X' in data:
        lines.append(data['X'])

    for reason in data.get('reasoning', []):
        lines.append(f'- {reason}')

    return '\n'.join(lines) + '\n'


def _write_json(stream: TextIO, data: Any):
    stream.write(json.dumps(data, indent=2) + '\n')


def _solve_model(group: Geometry, run_config: RunConfig,
                 stream: TextIO) -> int:
    m = run_config.getOption('m')
    rho = run_config.getOption('rho', Fraction(1))

    if group == Geometry.S2XR:
        verdict = product_qe(EinsteinFactor.sphere(2, rho),
                             EinsteinFactor.line(), m)

    else:
        verdict = space_form_verdict(rho, m)

    data = {'group': group.value, 'rho': float(rho), 'm': float(m),
            **verdict.to_json()}

    if run_config.output_format == 'json':
        _write_json(stream, data)

    else:
        stream.write(_render_verdict(group.display_name, data))

    return 0


def _frame(group: Geometry, run_config: RunConfig):
    if group == Geometry.H2XR:
        rho = run_config.getOption('rho', Fraction(1))

        if not rho > 0:
            raise UsageException(f'rho must be positive, got {rho}')

        return H2xRFrame.from_rho(rho)

    lambda_star = run_config.getOption('lambda_star')

    if lambda_star is None:
        if group != Geometry.R3:
            raise UsageException(f'solve --group {group.value} needs '
                                 '--lambda l1,l2,l3')

        lambda_star = (0, 0, 0)

    return MilnorFrame.create(lambda_star, group)


def cmd_solve(args: argparse.Namespace, run_config: RunConfig,
              stream: TextIO) -> int:
    """Write the solutions of one metric or the verdict of one cell.

    Raises:
        UsageException: If the arguments do not describe a problem.

    Returns:
        `int`: 0.
    """

    group = Geometry.from_name(run_config.getOption('group'))

    if run_config.output_format == 'csv':
        raise UsageException('csv output is only available for table')

    if run_config.sign_cell is not None:
        cell = compute_cell(group, *run_config.sign_cell,
                            run_config.witness_draws, run_config.seed)
        data = cell.to_json(run_config.certify)

        if run_config.output_format == 'json':
            _write_json(stream, data)

        else:
            stream.write(_render_verdict(
                f'{group.display_name}, m sign {args.m_sign}, A sign '
                f'{args.a_sign}', data))

        return 0

    if run_config.getOption('m') is None:
        raise UsageException('solve needs --m, or --m-sign with --a-sign')

    if not group.is_lie_group:
        return _solve_model(group, run_config, stream)

    report = solve_fixed_metric(_frame(group, run_config),
                                run_config.getOption('m'))

    data = report.to_json(run_config.certify)

    if args.oracle:
        oracle = numeric_oracle(report.problem.frame, report.problem.m,
                                seed=run_config.seed)
        discrepancies = compare_with_oracle(report, oracle)
        data['oracle'] = {
            'starts': oracle.starts,
            'converged': oracle.converged,
            'clusters': [cluster.to_json() for cluster in oracle],
            'discrepancies': [discrepancy.to_json()
                              for discrepancy in discrepancies],
        }

    if run_config.output_format == 'json':
        _write_json(stream, data)

    else:
        stream.write(_render_report(report, run_config.certify))

        if args.oracle:
            stream.write(f"\nOracle: {len(data['oracle']['clusters'])} "
                         f"clusters, {len(data['oracle']['discrepancies'])}"
                         ' discrepancies\n')

    return 0


def cmd_riccati(args: argparse.Namespace, run_config: RunConfig,
                stream: TextIO) -> int:
    """Write the classification, or the RK4 trajectory as CSV.

    Raises:
        UsageException: If `--integrate` is given without `--f0`.

    Returns:
        `int`: 0.
    """

    problem = RiccatiProblem(args.lam, args.m, args.f0)
    classification = classify_global(problem)

    if args.integrate:
        if args.f0 is None:
            raise UsageException('--integrate needs --f0')

        log.info('Riccati classification', classification.describe())
        rk4_oracle(problem, args.t_span, args.step).to_csv(stream)

        return 0

    if run_config.output_format == 'json':
        _write_json(stream, {
            'lambda': problem.lam,
            'm': problem.m,
            'f0': problem.f0,
            'kind': classification.kind.value,
            'description': classification.describe(),
            'blow_up': classification.blow_up,
        })

    else:
        stream.write(classification.describe() + '\n')

    return 0


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig, TextIO], int]] = {
    'table': cmd_table,
    'solve': cmd_solve,
    'riccati': cmd_riccati,
}


def _configure(args: argparse.Namespace):
    if args.config is not None:
        config.load(args.config)

    else:
        config.load()

    if args.verbose:
        log.set_level('debug')

    elif args.quiet:
        log.set_level('silent')

    else:
        log.set_level(str(config.get('log_level')))


def main(argv: Optional[List[str]] = None,
         stream: Optional[TextIO] = None) -> int:
    """Run the command line.

    Args:
        argv (`List[str]`, optional): The arguments. Defaults to
            `sys.argv[1:]`.
        stream (`TextIO`, optional): The report stream. Defaults to
            `sys.stdout`.

    Returns:
        `int`: The exit code.
    """

    if stream is None:
        stream = sys.stdout

    parser = build_parser()

    try:
        args = parser.parse_args(argv)
        _configure(args)
        run_config = _run_config(args)
        run_config.apply()

        return COMMANDS[args.command](args, run_config, stream)

    except USAGE_ERRORS as error:
        log.error(f'{type(error).__name__}{log.delimiter}{error}')
        sys.stderr.write(parser.format_usage())

        return EXIT_USAGE

    except Exception as error:
        log.exception(error)

        return EXIT_ERROR
