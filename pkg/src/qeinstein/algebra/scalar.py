"""Scalar helpers shared by the exact and floating point paths.

Inputs made only of ints and fractions stay exact (`Fraction`); any
float switches the whole computation to floating point.
"""

import math
from fractions import Fraction
from numbers import Integral, Rational
from typing import Any, Iterable, Tuple, Union

import numpy as np
import sympy


Scalar = Union[Fraction, float]


def is_exact_value(value: Any) -> bool:
    """Check whether `value` is an exact rational input.

    Args:
        value (`Any`): The value to check.

    Returns:
        `bool`: True for ints (not bools), fractions and sympy rationals.
    """

    if isinstance(value, bool):
        return False

    if isinstance(value, sympy.Rational):
        return True

    return isinstance(value, Rational)


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))

    if isinstance(value, Integral):
        return Fraction(int(value))

    return Fraction(value)


def as_scalars(values: Iterable[Any]) -> Tuple[Scalar, ...]:
    """Convert `values` to a tuple of a single scalar kind.

    Args:
        values (`Iterable[Any]`): Numbers to convert.

    Raises:
        ValueError: If a value is not finite.

    Returns:
        `Tuple[Scalar, ...]`: Fractions if every value is exact,
            otherwise floats.
    """

    values = tuple(values)

    if all(is_exact_value(value) for value in values):
        return tuple(_to_fraction(value) for value in values)

    converted = tuple(float(value) for value in values)

    for value in converted:
        if not math.isfinite(value):
            raise ValueError(f'value must be finite, got {value}')

    return converted


def as_scalar(value: Any) -> Scalar:
    """Convert a single number, see `as_scalars`."""

    return as_scalars((value,))[0]


def is_zero(value: Any, tolerance: float = 0.0) -> bool:
    """Check whether `value` is zero, exactly for exact values.

    Args:
        value (`Any`): The value to test.
        tolerance (`float`, optional): Absolute tolerance applied to
            floating point values. Defaults to 0.0.

    Returns:
        `bool`: True if `value` is zero.
    """

    if is_exact_value(value):
        return value == 0

    if isinstance(value, sympy.Expr):
        return bool(sympy.simplify(value) == 0)

    return abs(float(value)) <= tolerance


def sign(value: Any, tolerance: float = 0.0) -> int:
    """Get the sign of `value` as -1, 0 or 1."""

    if is_zero(value, tolerance):
        return 0

    return 1 if value > 0 else -1


def empty_array(shape: Tuple[int, ...], exact: bool) -> np.ndarray:
    """Create a zero array for the exact or floating path.

    Args:
        shape (`Tuple[int, ...]`): The array shape.
        exact (`bool`): Whether to use an object array of `Fraction`.

    Returns:
        `np.ndarray`: The zero array.
    """

    if not exact:
        return np.zeros(shape)

    array = np.empty(shape, dtype=object)
    array.fill(Fraction(0))

    return array


def is_exact_array(array: np.ndarray) -> bool:
    """Check whether `array` belongs to the exact (object) path."""

    return array.dtype == object


def to_float_array(array: np.ndarray) -> np.ndarray:
    """Evaluate an exact or symbolic array to float64."""

    return np.vectorize(float, otypes=[float])(array)


def to_sympy(value: Any) -> sympy.Expr:
    """Convert a scalar to a sympy number, keeping fractions exact.

    Args:
        value (`Any`): A Fraction, int, float or sympy expression.

    Returns:
        `sympy.Expr`: The sympy value.
    """

    if isinstance(value, sympy.Basic):
        return value

    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)

    if is_exact_value(value):
        return sympy.Integer(int(value))

    return sympy.Float(float(value))


def is_symbolic_array(array: np.ndarray) -> bool:
    """Check whether `array` holds sympy expressions with free symbols."""

    if not is_exact_array(array):
        return False

    return any(
        isinstance(value, sympy.Basic) and len(value.free_symbols) > 0
        for value in array.flat
    )


def promote(*arrays: np.ndarray) -> Tuple[np.ndarray, ...]:
    """Bring `arrays` onto a common path.

    Exact arrays stay exact together; a float array turns the others to
    float, unless one of them is symbolic, in which case everything
    becomes an object array.

    Returns:
        `Tuple[np.ndarray, ...]`: The promoted arrays, in order.
    """

    if all(is_exact_array(array) for array in arrays):
        return arrays

    if any(is_symbolic_array(array) for array in arrays):
        return tuple(array.astype(object) for array in arrays)

    return tuple(
        to_float_array(array) if is_exact_array(array) else array
        for array in arrays
    )


def max_abs(array: np.ndarray) -> Any:
    """Get the largest absolute entry of `array` (0 when empty).

    Symbolic entries are simplified first, so an identically vanishing
    symbolic array gives an exact zero.
    """

    values = list(np.asarray(array).flat)

    if len(values) == 0:
        return 0

    if is_symbolic_array(np.asarray(array)):
        return sympy.Max(*(abs(sympy.simplify(value)) for value in values))

    return max(abs(value) for value in values)


def to_json_number(value: Any) -> Union[int, float, str]:
    """Convert a scalar to a JSON number.

    Integral fractions become ints, other fractions and sympy numbers
    become floats and expressions with free symbols become strings.
    """

    if isinstance(value, sympy.Basic):
        if len(value.free_symbols) > 0:
            return str(value)

        if value.is_Integer:
            return int(value)

        return float(value)

    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value.numerator)

        return float(value)

    if isinstance(value, (np.integer, int)) and not isinstance(value, bool):
        return int(value)

    return float(value)


def half(array: np.ndarray) -> np.ndarray:
    """Halve `array`, keeping exact and symbolic entries exact."""

    if is_symbolic_array(array):
        return array * sympy.Rational(1, 2)

    if is_exact_array(array):
        return array * Fraction(1, 2)

    return array / 2


def reciprocal(value: Any) -> Any:
    """Get `1 / value`, exactly for exact values."""

    if isinstance(value, sympy.Basic):
        return 1 / value

    if is_exact_value(value):
        return 1 / _to_fraction(value)

    return 1.0 / value


def sqrt(value: Any) -> Any:
    """Get the square root of a nonnegative value.

    Rational squares of exact values stay `Fraction`, other exact values
    give a sympy surd and floats give a float.
    """

    if isinstance(value, sympy.Basic):
        root = sympy.sqrt(value)

    elif is_exact_value(value):
        root = sympy.sqrt(to_sympy(_to_fraction(value)))

    else:
        return math.sqrt(value)

    if root.is_Rational:
        return _to_fraction(root)

    return root
