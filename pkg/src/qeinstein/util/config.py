"""Provides an interface to interact with the loaded config.

Configuration is read from an INI file with a `[project]` section for
run defaults and a `[tolerance]` section for numeric thresholds. Values
from the file are merged over the defaults below.
"""

import os
from configparser import ConfigParser
from typing import Any, Dict, Optional, Union

from qeinstein.util import log
from qeinstein.util.exception import MissingConfigValueException


ConfigValue = Union[str, int, float, bool]


__DEFAULT_CONFIG = {
    'project': {
        'output_format': 'markdown',
        'seed': 0,
        'oracle_starts': 200,
        'witness_draws': 10,
        'log_level': 'warning',
    },
    'tolerance': {
        'structural': 1e-12,
        'solution': 1e-10,
        'signature_relative': 1e-10,
        'signature_floor': 1e-14,
        'cluster': 1e-6,
        'blow_up': 1e8,
    },
}


# Loaded config, filled by `load`
_config: Dict[str, Dict[str, ConfigValue]] = {}


def clear():
    """Clear the config."""

    log.debug('Clearing config')
    _config.clear()


def is_loaded() -> bool:
    """Check whether `load` has been called.

    Returns:
        `bool`: True if a config is loaded.
    """

    return len(_config) > 0


def load(filename: str = 'qeinstein.ini', include_default_config: bool = True,
         directory: Optional[str] = None):
    """Load the config file `filename` from `directory`.

    Args:
        filename (`str`, optional): The config file filename or path.
            Defaults to 'qeinstein.ini'.
        include_default_config (`bool`, optional): Whether or not to
            include default configuration values. Defaults to True.
        directory (`str`, optional): The directory to search, defaults to
            the current working directory. Ignored when `filename` is an
            absolute path.

    Raises:
        TypeError: If the `filename` is not a string.
        TypeError: If  `include_default_config` is not a boolean.
    """

    if not isinstance(filename, str):
        raise TypeError('filename must be of type str')

    if not isinstance(include_default_config, bool):
        raise TypeError('include_default_config must be of type bool')

    clear()

    if directory is None:
        directory = os.getcwd()

    config_path = os.path.join(directory, filename)

    config_parser = ConfigParser()
    read_list = config_parser.read(config_path)

    if len(read_list) == 0:
        log.debug('No config file found, using defaults', config_path)

    evaluated_config = get_evaluated_config_as_dict(config_parser)

    for section in set(__DEFAULT_CONFIG) | set(evaluated_config):
        defaults = {}

        if include_default_config:
            defaults = dict(__DEFAULT_CONFIG.get(section, {}))

        _config[section] = {
            **defaults,
            **evaluated_config.get(section, {}),
        }

    log.debug('Loaded config', _config)


def get_evaluated_config_as_dict(config_parser: ConfigParser
                                 ) -> Dict[str, Dict[str, ConfigValue]]:
    """Evaluate the dict in `config_parser`.

    Args:
        config_parser (`ConfigParser`): The config parser to get the dict
            from.

    Returns:
        `Dict[str, Dict[str, str | int | float | bool]]`: The evaluated
            dict.
    """

    evaluated_dict = {}

    for section in config_parser.sections():
        evaluated_dict[section] = {
            key: evaluate_config_value(config_parser, section, key)
            for key in config_parser[section]
        }

    return evaluated_dict


def evaluate_config_value(config_parser: ConfigParser, section: str, key: str
                          ) -> ConfigValue:
    """Evaluate config value in `section` with key `key`.

    Note:
        The value will first be evaluated as an integer, followed by a
        float, boolean and finally the string value will be returned if
        all else fails.

    Args:
        config_parser (`ConfigParser`): The config parser to evaluate the
            value from.
        section (`str`): The section to get the value from.
        key (`str`): The key to get the value from.

    Returns:
        `str` | `int` | `float` | `bool`: The evaluated value.
    """

    def try_evaluate(converter):
        try:
            return converter(section, key)

        except ValueError:
            return None

    for converter in (config_parser.getint, config_parser.getfloat,
                      config_parser.getboolean):
        value = try_evaluate(converter)

        if value is not None:
            return value

    return config_parser[section][key]


def get_section(section: str) -> Dict[str, ConfigValue]:
    """Get a copy of the config section `section`.

    Args:
        section (`str`): The section name.

    Raises:
        TypeError: If `section` is not a string.
        MissingConfigValueException: If the section does not exist.

    Returns:
        `Dict[str, str | int | float | bool]`: The section values.
    """

    if not isinstance(section, str):
        raise TypeError('section must be of type str')

    if not is_loaded():
        load()

    if section not in _config:
        raise MissingConfigValueException(f'{section} not set in config')

    return dict(_config[section])


def get(key: str, section: str = 'project',
        default: Any = None) -> ConfigValue:
    """Get the value at `key` from section `section`.

    Args:
        key (`str`): The key to get the value from.
        section (`str`, optional): The section to get from. Defaults
            to 'project'.
        default (`Any`, optional): The default value to return if the
            key is not found. Defaults to None.

    Raises:
        TypeError: If the `key` is not a string.

    Returns:
        `str` | `int` | `float` | `bool`: The value from the config.
    """

    if not isinstance(key, str):
        raise TypeError('key must be of type str')

    if not is_loaded():
        load()

    return _config.get(section, {}).get(key, default)


def set_value(key: str, value: ConfigValue, section: str = 'project'):
    """Override the value at `key` in section `section`.

    Args:
        key (`str`): The key to set.
        value (`str` | `int` | `float` | `bool`): The new value.
        section (`str`, optional): The section to set in. Defaults to
            'project'.

    Raises:
        TypeError: If the `key` or `section` is not a string.
    """

    if not isinstance(key, str):
        raise TypeError('key must be of type str')

    if not isinstance(section, str):
        raise TypeError('section must be of type str')

    if not is_loaded():
        load()

    _config.setdefault(section, {})[key] = value
    log.debug('Set config value', {'section': section, 'key': key,
                                   'value': value})


def tolerance(key: str) -> float:
    """Get a numeric threshold from the `[tolerance]` section.

    Args:
        key (`str`): The tolerance name, e.g. 'structural'.

    Raises:
        MissingConfigValueException: If the tolerance is not set.

    Returns:
        `float`: The tolerance.
    """

    value = get(key, section='tolerance')

    if value is None:
        raise MissingConfigValueException(f'tolerance {key} not set')

    return float(value)


def nested_get(*key_list: str, default: Any = None
               ) -> Union[ConfigValue, Dict[str, ConfigValue], None]:
    """Get a value, descending down the config tree by iterating over
    `key_list`, starting at the section name.

    Args:
        default (`Any`, optional): The value to return if no config value
            is found. Defaults to None.

    Returns:
        `str` | `int` | `float` | `bool` | `dict` | `None`: The value from
            the config.

    Example:
        >>> config.nested_get('tolerance', 'solution')
        1e-10
    """

    if not is_loaded():
        load()

    node: Any = _config

    for key in key_list:
        if not hasattr(node, '__getitem__') or key not in node:
            return default

        node = node[key]

    return default if node is None else node
