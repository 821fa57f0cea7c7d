"""Einstein factors of a Riemannian product and verdicts on products."""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from qeinstein.algebra import scalar
from qeinstein.products.exception import ParameterException
from qeinstein.riccati import RiccatiKind
from qeinstein.solver.problem import Verdict


@dataclass(frozen=True)
class EinsteinFactor:
    """A simply connected complete Einstein manifold with `Ric = rho g`.

    Attributes:
        dim (`int`): The dimension.
        rho (`Any`): The Einstein constant.
        periodic_geodesics (`bool`): Whether every geodesic is closed.
        is_line (`bool`): Whether the factor is the real line.
        name (`str`): A label for reports.
    """

    dim: int
    rho: Any
    periodic_geodesics: bool = False
    is_line: bool = False
    name: str = ''

    def __post_init__(self):
        if isinstance(self.dim, bool) or not isinstance(self.dim, int):
            raise TypeError('dim must be of type int')

        if self.dim < 1:
            raise ParameterException(f'dim must be positive, got {self.dim}')

        object.__setattr__(self, 'rho', scalar.as_scalar(self.rho))

        if self.is_line and (self.dim != 1 or self.rho != 0):
            raise ParameterException('a line has dim 1 and rho 0')

        if self.dim == 1:
            if self.rho != 0:
                raise ParameterException('a 1-dimensional factor is flat')

            # Simply connected and complete
            object.__setattr__(self, 'is_line', True)

    @classmethod
    def line(cls) -> 'EinsteinFactor':
        """Get the real line."""

        return cls(1, 0, is_line=True, name='R')

    @classmethod
    def sphere(cls, dim: int, rho: Any = 1) -> 'EinsteinFactor':
        """Get a round sphere with `Ric = rho g`, `rho > 0`."""

        if not rho > 0:
            raise ParameterException(f'a sphere has rho > 0, got {rho}')

        return cls(dim, rho, periodic_geodesics=True, name=f'S^{dim}')

    @classmethod
    def hyperbolic(cls, dim: int, rho: Any = 1) -> 'EinsteinFactor':
        """Get hyperbolic space with `Ric = -rho g`, `rho > 0`."""

        if not rho > 0:
            raise ParameterException(f'rho must be positive, got {rho}')

        return cls(dim, -scalar.as_scalar(rho), name=f'H^{dim}')

    @property
    def label(self) -> str:
        """`str`: The name, or `M^dim(rho)` when unnamed."""

        if self.name:
            return self.name

        return f'M^{self.dim}({self.rho})'

    def to_json(self) -> Dict[str, Any]:
        return {
            'name': self.label,
            'dim': self.dim,
            'rho': scalar.to_json_number(self.rho),
            'periodic_geodesics': self.periodic_geodesics,
            'is_line': self.is_line,
        }


@dataclass(frozen=True)
class ProductVerdict:
    """The solutions of `ric_X^m = A g` on a product or model space.

    Attributes:
        verdict (`Verdict`): Exists, Trivial or None.
        A (`Any`, optional): The Einstein constant, None for `None`.
        field (`str`): The field, e.g. `+-sqrt(-A m) d/dr`.
        coefficient (`Any`, optional): `|X|` of the constant solutions.
        branches (`Tuple[RiccatiKind, ...]`): Admissible shapes of `X`
            along the line.
        reasoning (`Tuple[str, ...]`): The rules applied, in order.
    """

    verdict: Verdict
    A: Optional[Any] = None
    field: str = 'X = 0'
    coefficient: Optional[Any] = None
    branches: Tuple[RiccatiKind, ...] = ()
    reasoning: Tuple[str, ...] = ()

    def with_reason(self, *reasons: str) -> 'ProductVerdict':
        """Get a copy with `reasons` appended."""

        return ProductVerdict(self.verdict, self.A, self.field,
                              self.coefficient, self.branches,
                              self.reasoning + tuple(reasons))

    def to_json(self) -> Dict[str, Any]:
        """Get the verdict in the solution report layout."""

        data: Dict[str, Any] = {
            'verdict': self.verdict.value,
            'A': None if self.A is None else scalar.to_json_number(self.A),
            'X': self.field,
            'coefficient': None if self.coefficient is None
            else scalar.to_json_number(self.coefficient),
            'branches': [branch.value for branch in self.branches],
            'reasoning': list(self.reasoning),
        }

        return data
