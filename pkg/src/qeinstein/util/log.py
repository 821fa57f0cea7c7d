"""Provides logging functionality.

Messages go to `stream` (stderr by default) so that report output on
stdout stays byte-identical between runs.

Attributes:
    delimiter (`str`): The delimiter to use for the log message
        between the message and the context, default ' : '
    stream (`TextIO`): The stream written to, default `sys.stderr`.
"""

import os
import sys
import traceback
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Set, TextIO, Tuple

import numpy as np


class __Empty__:
    """Class for kwarg default value.

    Note:
        This allows None to be passed and still interpreted
        as a value.
    """


delimiter: str = ' : '

stream: TextIO = sys.stderr


LEVELS = {
    'debug': 10,
    'info': 20,
    'warning': 30,
    'error': 40,
    'silent': 100,
}

_level: int = LEVELS['warning']


def set_level(name: str):
    """Set the minimum level a message needs to be written.

    Args:
        name (`str`): One of 'debug', 'info', 'warning', 'error' or
            'silent'.

    Raises:
        TypeError: If `name` is not a string.
        ValueError: If `name` is not a known level.
    """

    global _level

    if not isinstance(name, str):
        raise TypeError(f'name must be of type str, got {type(name)}')

    if name.lower() not in LEVELS:
        raise ValueError(f'Unknown log level "{name}"')

    _level = LEVELS[name.lower()]


def get_level() -> str:
    """Get the name of the current level.

    Returns:
        `str`: The level name.
    """

    for name, value in LEVELS.items():
        if value == _level:
            return name

    return 'warning'


def is_enabled(level: str) -> bool:
    """Check whether messages at `level` are written.

    Args:
        level (`str`): The level name.

    Returns:
        `bool`: True if the level passes the current threshold.
    """

    return LEVELS[level] >= _level


def _write(text: str):
    stream.write(text)


def _colour(text: str, code: str) -> str:
    # NO_COLOR disables escapes, see https://no-color.org
    if 'NO_COLOR' in os.environ:
        return text

    if not hasattr(stream, 'isatty') or not stream.isatty():
        return text

    return f'\033[{code}m{text}\033[0m'


def _emit(level: str, text: str, context: Any):
    if not isinstance(text, str):
        raise TypeError(f'text must be of type str, got {type(text)}')

    if not is_enabled(level):
        return

    if level in ('warning', 'error'):
        text = _colour(f'{level.upper()}: ', '33' if level == 'warning'
                       else '31') + text

    _write(text)

    if context is not __Empty__:
        _write(f'{delimiter}{format(context)}')

    _write('\n')


def debug(text: str, context: Any = __Empty__):
    """Display `text` and formatted `context` at debug level.

    Args:
        text (`str`): The text to display.
        context (`Any`, optional): The value to be formatted and displayed
            along with the `text`. Defaults to __Empty__.
    """

    _emit('debug', text, context)


def info(text: str, context: Any = __Empty__):
    """Display unformatted `text` to the log stream
    alongside formatted `context`, if passed.

    Args:
        text (`str`): The text to display as information.
        context (`Any`, optional): The value to be formatted and displayed
            along with the `text`. Defaults to __Empty__.

    Raises:
        TypeError: If `text` is not a string.
    """

    _emit('info', text, context)


def warning(text: str, context: Any = __Empty__):
    """Display `text` and formatted `context` at warning level.

    Args:
        text (`str`): The warning text.
        context (`Any`, optional): The value to be formatted and displayed
            along with the `text`. Defaults to __Empty__.
    """

    _emit('warning', text, context)


def error(text: str, context: Any = __Empty__):
    """Display `text` and formatted `context` at error level.

    Args:
        text (`str`): The error text.
        context (`Any`, optional): The value to be formatted and displayed
            along with the `text`. Defaults to __Empty__.
    """

    _emit('error', text, context)


def label(label: str, context: Any = __Empty__):
    """Display `label` as a label underlined with '#' characters,
    followed by formatted `context`, if passed.

    Args:
        label (`str`): The label to underline.
        context (Any, optional): The value to be formatted and displayed
            along with the `label`. Defaults to __Empty__.

    Raises:
        TypeError: If the `label` is not a string.
    """

    if not isinstance(label, str):
        raise TypeError(f'text must be of type str, got {type(label)}')

    if not is_enabled('info'):
        return

    hash_bar = '#' * (len(label) + 4)

    _write(_colour(f'\n{hash_bar}\n# {label} #\n{hash_bar}\n\n', '1'))

    if context is not __Empty__:
        _write(format(context))
        _write('\n')


def exception(error: Exception, reraise: bool = False):
    """Display a caught exception and optionally reraise it.

    The traceback is only written at debug level; the message is
    always written unless the level is 'silent'.

    Args:
        error (`Exception`): The caught error to display.
        reraise (`bool`, optional): Whether or not to reraise
            the error after displaying. Defaults to False.

    Raises:
        TypeError: If the `error` is not an `Exception`.
        `error`: The passed exception, raised if `reraise` is True.
    """

    if not isinstance(error, Exception):
        error_message = f'error must be of type Exception, got {type(error)}'

        raise TypeError(error_message)

    _emit('error', f'{type(error).__name__}{delimiter}{error}', __Empty__)

    if is_enabled('debug'):
        label('Traceback')
        _write(traceback.format_exc())

    if reraise:
        raise error


def format(content: Any, **kwargs: Any) -> str:
    """Format `content` according to `kwargs` into a string.

    Note:
        Containers are expanded over multiple lines; numpy arrays are
        formatted as nested lists and fractions as `p/q`.

    Args:
        content (`Any`): The content to format.

    Returns:
        `str`: The formatted content
    """

    format_methods = {
        dict: format_dict,
        list: format_list,
        tuple: format_tuple,
        set: format_set,
        frozenset: lambda value, **kw: format_set(set(value), **kw),
        str: lambda string_value, **kw: f'"{string_value}"',
        Fraction: lambda fraction, **kw: str(fraction),
    }

    content_type = type(content)

    if content_type in format_methods:
        return format_methods[content_type](content, **kwargs)

    if isinstance(content, np.ndarray):
        return format_list(content.tolist(), **kwargs)

    if isinstance(content, np.generic):
        return str(content.item())

    return str(content)


def format_dict(dict_value: Dict[Any, Any], indent_level: int = 0,
                **kwargs: Any) -> str:
    """Format the given `dict_value` into a string.

    Args:
        dict_value (`Dict[Any, Any]`): The dictionary to format.
        indent_level (`int`, optional): The current indent level. Defaults to
            0.

    Raises:
        TypeError: If the `dict_value` is not a `dict`.
        TypeError: If the `indent_level` is not an `int`.

    Returns:
        `str`: The formatted dictionary string.
    """

    if not isinstance(dict_value, dict):
        raise TypeError(
            f'dict_value must be of type dict, got {type(dict_value)}'
        )

    if not isinstance(indent_level, int):
        raise TypeError(
            f'indent_level must be of type int, got {type(indent_level)}'
        )

    if len(dict_value) == 0:
        return '{}'

    lines = ['{']
    current_indent = '\t' * (indent_level + 1)

    for key, value in dict_value.items():
        formatted_value = format(value, indent_level=indent_level + 1,
                                 **kwargs)

        lines.append(f'{current_indent}"{key}"{delimiter}{formatted_value},')

    lines.append('\t' * indent_level + '}')

    return '\n'.join(lines)


def format_list(list_value: List[Any], **kwargs: Any) -> str:
    """Format the given `list_value` into a string.

    Args:
        list_value (`List[Any]`): The list to format.

    Raises:
        TypeError: If the `list_value` is not a `list`.

    Returns:
        `str`: The formatted list string.
    """

    if not isinstance(list_value, list):
        raise TypeError(
            f'list_value must be of type list, got {type(list_value)}'
        )

    return format_iterable(list_value, ('[', ']'), **kwargs)


def format_tuple(tuple_value: Tuple[Any], **kwargs: Any) -> str:
    """Format the given `tuple_value` into a string.

    Args:
        tuple_value (`Tuple[Any]`): The tuple to format.

    Raises:
        TypeError: If the `tuple_value` is not a `tuple`.

    Returns:
        `str`: The formatted tuple string.
    """

    if not isinstance(tuple_value, tuple):
        raise TypeError(
            f'tuple_value must be of type tuple, got {type(tuple_value)}'
        )

    return format_iterable(tuple_value, ('(', ')'), **kwargs)


def format_set(set_value: Set[Any], **kwargs: Any) -> str:
    """Format the given `set_value` into a string.

    Args:
        set_value (`Set[Any]`): The set to format.

    Raises:
        TypeError: If the `set_value` is not a `set`.

    Returns:
        `str`: The formatted set string.
    """

    if not isinstance(set_value, set):
        raise TypeError(
            f'set_value must be of type set, got {type(set_value)}'
        )

    return format_iterable(tuple(set_value), ('{', '}'), **kwargs)


def format_iterable(iterable_value: Iterable, wrappers: Tuple[str, str],
                    use_multiline: bool = None, indent_level: int = 0,
                    **kwargs: Any) -> str:
    """Format the given `iterable_value` into a string.

    Args:
        iterable_value (`Iterable`): The iterable to format.
        wrappers (`Tuple[str, str]`): The start and end characters
            to enclose the iterable.
        use_multiline (`bool`, optional): Whether or not to format over
            multiple lines. Defaults to None, meaning multiline unless
            every item is a number.
        indent_level (`int`, optional): The current indent
            level. Defaults to 0.

    Raises:
        TypeError: If the `iterable_value` is not an `iterable`.
        TypeError: If the `wrappers` are not a `tuple`.

    Returns:
        str: The formatted iterable string.
    """

    if not isinstance(iterable_value, Iterable):
        raise TypeError(
            f'iterable_value must be of type iterable, got '
            f'{type(iterable_value)}'
        )

    if not isinstance(wrappers, tuple):
        raise TypeError(
            f'wrappers must be of type tuple, got {type(wrappers)}')

    items = list(iterable_value)

    # Rows of numbers (frame triples, tensor rows) read better inline
    if use_multiline is None:
        use_multiline = not all(
            isinstance(item, (int, float, Fraction, np.generic))
            and not isinstance(item, bool)
            for item in items
        ) or len(items) == 0

    if not use_multiline:
        inner = ', '.join(
            format(item, indent_level=indent_level + 1, **kwargs)
            for item in items
        )

        return f'{wrappers[0]}{inner}{wrappers[1]}'

    indent_text = '\t' * (indent_level + 1)
    text = wrappers[0]

    for item in items:
        formatted_value = format(item, indent_level=indent_level + 1,
                                 **kwargs)

        text += f'\n{indent_text}{formatted_value},'

    text += '\n' + '\t' * indent_level + wrappers[1]

    return text
