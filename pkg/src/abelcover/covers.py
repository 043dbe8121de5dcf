"""Split abelian covers of a complete intersection and their invariants.

Since ``Pic(Y) = Z``, the pushforward of the structure sheaf of an abelian
cover ``X -> Y`` splits as ``O_Y + sum_i O_Y(-k_i)``.  A cover is described
here only through that multiset of trace-zero twists ``k_i`` together with the
ramification twist that enters the canonical bundle ``K_X = pi^* O_Y(s)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import NamedTuple, Union

from .ci_geometry import CompleteIntersection, h0


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleCyclic:
    """Simple cyclic ``n``-cover branched along a divisor in ``|O_Y(nk)|``."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 2 or self.k < 1:
            raise CoverError(f"simple cyclic cover needs n >= 2, k >= 1 (got n={self.n}, k={self.k})")

    @property
    def factors(self) -> tuple[tuple[int, int], ...]:
        return ((self.n, self.k),)

    @cached_property
    def twists(self) -> tuple[int, ...]:
        return tuple(i * self.k for i in range(1, self.n))

    @property
    def degree(self) -> int:
        return self.n

    @property
    def ram_twist(self) -> int:
        return (self.n - 1) * self.k


@dataclass(frozen=True)
class CyclicProduct:
    """Fiber product over ``Y`` of simple cyclic covers ``(n_j, kappa_j)``.

    The Z_n x Z_2 covers are ``CyclicProduct(((n, k), (2, l)))``; the last
    order-2 factor plays the role of the inner double cover.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        factors = tuple((int(n), int(k)) for n, k in self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise CoverError("cyclic product needs at least one factor")
        for n, k in factors:
            if n < 2 or k < 1:
                raise CoverError(f"bad cyclic factor (n={n}, k={k}): need n >= 2, k >= 1")

    @cached_property
    def twists(self) -> tuple[int, ...]:
        ranges = [range(n) for n, _ in self.factors]
        out = []
        for idx in product(*ranges):
            if any(idx):
                out.append(sum(i * k for i, (_, k) in zip(idx, self.factors)))
        return tuple(sorted(out))

    @property
    def degree(self) -> int:
        return math.prod(n for n, _ in self.factors)

    @property
    def ram_twist(self) -> int:
        return sum((n - 1) * k for n, k in self.factors)


@dataclass(frozen=True)
class ExplicitSplit:
    """Split cover given directly by its twists; the ramification twist is
    not derivable in general and must be supplied."""

    twists: tuple[int, ...]
    ram_twist: int

    def __post_init__(self):
        twists = tuple(sorted(int(t) for t in self.twists))
        object.__setattr__(self, "twists", twists)
        if not twists:
            raise CoverError("explicit split cover needs at least one twist")
        if twists[0] < 1:
            raise CoverError(f"twists must be >= 1, got {twists[0]}")

    @property
    def degree(self) -> int:
        return len(self.twists) + 1


CoverSpec = Union[SimpleCyclic, CyclicProduct, ExplicitSplit]


def znz2(n: int, k: int, l: int) -> CyclicProduct:
    return CyclicProduct(((n, k), (2, l)))


def trace_zero_twists(spec: CoverSpec) -> tuple[int, ...]:
    return spec.twists


def subcanonicity(ci: CompleteIntersection, spec: CoverSpec) -> int:
    """``s`` with ``K_X = pi^* O_Y(s)``: ``delta + ram_twist - N - 1``."""
    return ci.delta + spec.ram_twist - ci.N - 1


class Configuration(NamedTuple):
    ci: CompleteIntersection
    spec: CoverSpec


@dataclass(frozen=True)
class CoverAnalysis:
    m: int
    deg: int
    s: int
    Lm: int
    Km: int
    pg: int
    complete_series: bool
    type_flag: str
    twists: tuple[int, ...]

    @property
    def Km_factored(self) -> str:
        """``K^m`` written as ``L^m`` times a power of ``s``, e.g. ``24·3^10``."""
        if self.s == 0:
            return "0"
        if abs(self.s) == 1:
            return str(self.Km)
        sign = "-" if self.Km < 0 else ""
        return f"{sign}{self.Lm}·{abs(self.s)}^{self.m}"


def type_flag(s: int) -> str:
    if s < 0:
        return "Fano"
    if s == 0:
        return "CalabiYau"
    return "GeneralType"


def geometric_genus(ci: CompleteIntersection, spec: CoverSpec) -> int:
    # h^0(K_X) = h^0(O_Y(s)) + sum_i h^0(O_Y(s - k_i)) by the splitting
    s = subcanonicity(ci, spec)
    return h0(ci, s) + sum(h0(ci, s - t) for t in spec.twists)


def analyze(ci: CompleteIntersection, spec: CoverSpec) -> CoverAnalysis:
    s = subcanonicity(ci, spec)
    m = ci.dim
    Lm = spec.degree * ci.total_deg
    return CoverAnalysis(
        m=m,
        deg=spec.degree,
        s=s,
        Lm=Lm,
        Km=s**m * Lm,
        pg=geometric_genus(ci, spec),
        complete_series=min(spec.twists) >= 2,
        type_flag=type_flag(s),
        twists=spec.twists,
    )
