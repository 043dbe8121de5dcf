"""Smooth complete intersections in projective space, as numerical data.

A complete intersection ``Y`` in ``P^N`` is recorded by its ambient dimension
and its multidegree.  Cohomology of the twists ``O_Y(a)`` is computed from the
Hilbert function of the graded coordinate ring, which for a complete
intersection is the coefficient of ``t^a`` in::

    prod_i (1 - t^{d_i}) / (1 - t)^{N+1}

Nothing here checks smoothness; that is an assumption on the caller's data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class CIError(ValueError):
    """Base class for invalid complete-intersection data."""


class EmptyMultidegree(CIError):
    pass


class DegreeTooSmall(CIError):
    pass


class CodimTooLarge(CIError):
    pass


@dataclass(frozen=True)
class CompleteIntersection:
    """Complete intersection of multidegree ``degrees`` in ``P^N``.

    ``degrees`` is kept sorted nondecreasing whatever order it was given in.
    """

    N: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(sorted(int(d) for d in self.degrees))
        object.__setattr__(self, "degrees", degrees)
        if not degrees:
            raise EmptyMultidegree("multidegree must have at least one entry")
        if degrees[0] <= 1:
            raise DegreeTooSmall(f"every degree must be >= 2, got {degrees[0]}")
        if self.N - len(degrees) <= 1:
            raise CodimTooLarge(
                f"dim Y = N - r = {self.N - len(degrees)} must be >= 2 "
                f"(N={self.N}, r={len(degrees)})"
            )

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        return self.N - self.r

    @property
    def delta(self) -> int:
        return sum(self.degrees)

    @property
    def total_deg(self) -> int:
        return math.prod(self.degrees)

    @property
    def surface_mode(self) -> bool:
        return self.dim == 2

    def d(self, i: int) -> int:
        """The ``i``-th degree, 1-based."""
        if not 1 <= i <= self.r:
            raise IndexError(f"degree index {i} outside 1..{self.r}")
        return self.degrees[i - 1]

    def __str__(self):
        return f"CI(P^{self.N}; {','.join(map(str, self.degrees))})"


def make_ci(N: int, degrees) -> CompleteIntersection:
    return CompleteIntersection(N, tuple(degrees))


@lru_cache(maxsize=65536)
def _hilbert(N: int, degrees: tuple[int, ...], a: int) -> int:
    # numerator prod(1 - t^d) truncated at t^a, then convolve with C(N+j, N)
    num = [0] * (a + 1)
    num[0] = 1
    for d in degrees:
        for j in range(a, d - 1, -1):
            num[j] -= num[j - d]
    return sum(c * math.comb(N + a - j, N) for j, c in enumerate(num) if c)


def h0(ci: CompleteIntersection, a: int) -> int:
    """``dim H^0(O_Y(a))``; zero for negative twists."""
    if a < 0:
        return 0
    return _hilbert(ci.N, ci.degrees, a)


def canonical_twist(ci: CompleteIntersection) -> int:
    """The integer ``c`` with ``K_Y = O_Y(c)``, namely ``delta - N - 1``."""
    return ci.delta - ci.N - 1
