"""The hyperbolic plane in the chart `g = dr^2 + e^(2r) dx^2`.

Everything is computed symbolically in `r` and `x` with sympy.
"""

from typing import Dict, List, Optional, Sequence, Tuple

import sympy


Vector = Tuple[sympy.Expr, sympy.Expr]


class H2Chart:
    """The metric `dr^2 + e^(2r) dx^2` with coordinates `(r, x)`.

    Attributes:
        r (`sympy.Symbol`): The first coordinate.
        x (`sympy.Symbol`): The second coordinate.
        coordinates (`Tuple[sympy.Symbol, sympy.Symbol]`): `(r, x)`.
        metric (`sympy.Matrix`): The metric matrix.
    """

    def __init__(self):
        self.r, self.x = sympy.symbols('r x', real=True)
        self.coordinates = (self.r, self.x)
        self.metric = sympy.Matrix([
            [1, 0],
            [0, sympy.exp(2 * self.r)],
        ])
        self._inverse = self.metric.inv()
        self._christoffel: Optional[List[List[List[sympy.Expr]]]] = None

    def christoffel(self) -> List[List[List[sympy.Expr]]]:
        """Get `gamma[k][i][j]`, the `d_k` component of
        `nabla_{d_i} d_j`."""

        if self._christoffel is not None:
            return self._christoffel

        g, inverse, q = self.metric, self._inverse, self.coordinates
        size = len(q)

        self._christoffel = [[[
            sympy.simplify(sum(
                inverse[k, l] * (sympy.diff(g[j, l], q[i])
                                 + sympy.diff(g[i, l], q[j])
                                 - sympy.diff(g[i, j], q[l])) / 2
                for l in range(size)
            ))
            for j in range(size)]
            for i in range(size)]
            for k in range(size)]

        return self._christoffel

    def covariant_derivative(self, i: int, j: int) -> Vector:
        """Get the components of `nabla_{d_i} d_j`."""

        gamma = self.christoffel()

        return tuple(gamma[k][i][j] for k in range(len(self.coordinates)))

    def ricci(self) -> sympy.Matrix:
        """Get the Ricci tensor in coordinates."""

        gamma, q = self.christoffel(), self.coordinates
        size = len(q)

        def component(i: int, j: int) -> sympy.Expr:
            value = 0

            for a in range(size):
                value += sympy.diff(gamma[a][i][j], q[a])
                value -= sympy.diff(gamma[a][i][a], q[j])

                for b in range(size):
                    value += gamma[a][a][b] * gamma[b][i][j]
                    value -= gamma[a][j][b] * gamma[b][i][a]

            return sympy.simplify(value)

        return sympy.Matrix(size, size, component)

    def lie_derivative(self, field: Sequence[sympy.Expr]) -> sympy.Matrix:
        """Get `L_X g` for a vector field given by its components."""

        g, q = self.metric, self.coordinates
        size = len(q)

        def component(i: int, j: int) -> sympy.Expr:
            value = sum(field[k] * sympy.diff(g[i, j], q[k])
                        for k in range(size))
            value += sum(g[k, j] * sympy.diff(field[k], q[i])
                         + g[i, k] * sympy.diff(field[k], q[j])
                         for k in range(size))

            return sympy.simplify(value)

        return sympy.Matrix(size, size, component)

    def lower(self, field: Sequence[sympy.Expr]) -> sympy.Matrix:
        """Get the one-form `g(X, .)` as a column."""

        return self.metric * sympy.Matrix(field)

    def bakry_emery(self, m: sympy.Expr,
                    field: Optional[Sequence[sympy.Expr]] = None
                    ) -> sympy.Matrix:
        """Get `ric + L_X g / 2 - X* (x) X* / m`.

        Args:
            m (`sympy.Expr`): The nonzero parameter.
            field (`Sequence[sympy.Expr]`, optional): The components of X.
                Defaults to `-m d_r`.

        Raises:
            ValueError: If `m` is zero.

        Returns:
            `sympy.Matrix`: The tensor in coordinates.
        """

        m = sympy.sympify(m)

        if m == 0:
            raise ValueError('m must be nonzero')

        if field is None:
            field = (-m, sympy.Integer(0))

        one_form = self.lower(field)
        tensor = (self.ricci() + self.lie_derivative(field) / 2
                  - one_form * one_form.T / m)

        return sympy.simplify(tensor)

    def bakry_emery_residual(self, m: sympy.Expr) -> sympy.Matrix:
        """Get `ric_X^m - (-1 - m) g` for `X = -m d_r`."""

        m = sympy.sympify(m)

        return sympy.simplify(self.bakry_emery(m) - (-1 - m) * self.metric)


def h2_chart_connection() -> Dict[Tuple[str, str], Vector]:
    """Get `nabla_{d_a} d_b` for `a, b` in `('r', 'x')`.

    Returns:
        `Dict[Tuple[str, str], Vector]`: The covariant derivatives keyed by
            coordinate names, e.g. `('x', 'x') -> (-e^(2r), 0)`.
    """

    chart = H2Chart()
    names = ('r', 'x')

    return {
        (names[i], names[j]): chart.covariant_derivative(i, j)
        for i in range(2) for j in range(2)
    }
