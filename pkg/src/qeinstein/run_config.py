"""Options of one command line run."""

from typing import Any, Dict, Optional, Tuple

from qeinstein.mixin.option_mixin import OptionMixin
from qeinstein.util import config
from qeinstein.util.exception import UsageException


OUTPUT_FORMATS = ('markdown', 'json', 'csv')

M_SIGNS = {'pos': 1, 'neg': -1}

A_SIGNS = {'pos': 1, 'zero': 0, 'neg': -1}

# Exclusive upper bound of a --tolerance override
MAX_TOLERANCE = 1e-4


class RunConfig(OptionMixin):
    """The options of a run, falling back to the loaded config.

    Options:
        group (`str`): The geometry name.
        lambda_star (`Tuple`): The structure constants of a Milnor frame.
        m (`Any`): The parameter.
        m_sign (`str`): `pos` or `neg`.
        a_sign (`str`): `pos`, `zero` or `neg`.
        rho (`Any`): The curvature scale of a model space.
        tolerance (`float`): Override of the solution tolerance.
        output_format (`str`): `markdown`, `json` or `csv`.
        seed (`int`): Seed of random starts and draws.
        witness_draws (`int`): Draws confirming each witness.
        certify (`bool`): Whether to include case records.
    """

    option_sections = {
        'output_format': 'project',
        'seed': 'project',
        'witness_draws': 'project',
    }

    def __init__(self, options: Optional[Dict[str, Any]] = None):
        super().__init__(options)
        self.validate()

    def validate(self):
        """Check the options.

        Raises:
            UsageException: If an option is out of range.
        """

        tolerance = self.getOption('tolerance')

        if tolerance is not None and not 0 < tolerance < MAX_TOLERANCE:
            raise UsageException(
                f'tolerance must lie in (0, {MAX_TOLERANCE}), got {tolerance}')

        output_format = self.output_format

        if output_format not in OUTPUT_FORMATS:
            raise UsageException(f'Unknown format "{output_format}"')

        if self.getOption('m_sign') not in (None, *M_SIGNS):
            raise UsageException('m sign must be pos or neg')

        if self.getOption('a_sign') not in (None, *A_SIGNS):
            raise UsageException('A sign must be pos, zero or neg')

    def apply(self):
        """Push the overrides into the loaded config."""

        tolerance = self.getOption('tolerance')

        if tolerance is not None:
            config.set_value('solution', float(tolerance), section='tolerance')

        if 'seed' in self.getOptions():
            config.set_value('seed', int(self.getOption('seed')))

    @property
    def output_format(self) -> str:
        """`str`: The output format."""

        return str(self.getOption('output_format', 'markdown'))

    @property
    def seed(self) -> int:
        """`int`: The seed."""

        return int(self.getOption('seed', 0))

    @property
    def witness_draws(self) -> int:
        """`int`: Draws confirming each witness."""

        return int(self.getOption('witness_draws', 10))

    @property
    def certify(self) -> bool:
        """`bool`: Whether to include case records."""

        return bool(self.getOption('certify', False))

    @property
    def sign_cell(self) -> Optional[Tuple[int, int]]:
        """`Tuple[int, int]`: The selected `(sign m, sign A)`, None unless
        both signs are set."""

        m_sign, a_sign = self.getOption('m_sign'), self.getOption('a_sign')

        if m_sign is None or a_sign is None:
            return None

        return (M_SIGNS[m_sign], A_SIGNS[a_sign])
