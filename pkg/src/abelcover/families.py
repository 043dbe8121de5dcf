"""Parametric infinite families of covers with prescribed deformation behaviour."""

from __future__ import annotations

from typing import Iterator, Optional

from .ci_geometry import CompleteIntersection
from .classifier import Tower, classify, check_embedding_a, check_embedding_b, default_tower
from .covers import Configuration, SimpleCyclic, subcanonicity, znz2
from .enumeration import CRITERIA, CYCLIC, ZNZ2, bound_box, candidate_multidegrees


class BadParity(ValueError):
    pass


class OutOfBoundBox(ValueError):
    pass


class FamilyError(ValueError):
    pass


def family_codim3_limit1(k: int) -> Configuration:
    """Codimension-3 embeddings with ``2N = 9k``: ``CI(9k/2; k, 2k, 3k)`` with
    a simple cyclic 4-cover of twist ``k``.  Here ``s = N - 1``."""
    if k < 2:
        raise FamilyError(f"k must be >= 2, got {k}")
    if (9 * k) % 2:
        raise BadParity(f"2N = 9k needs k even, got k={k}")
    N = 9 * k // 2
    conf = Configuration(CompleteIntersection(N, (k, 2 * k, 3 * k)), SimpleCyclic(4, k))
    assert subcanonicity(*conf) == N - 1
    assert check_embedding_a(*conf) is not None
    return conf


def rational_limit_s(a: int, b: int, k: int, l: int) -> int:
    c = b - a
    return l * c * (c * l + 3) * k // 2 - b * l - 1


def family_rational_limit(a: int, b: int, k: int, l: int) -> Configuration:
    """Embeddings with ``m / N = a / b``: ``N = bl``, ``n = (b-a)l + 1`` and
    multidegree ``(k, 2k, ..., (n-1)k)``, so ``r = n - 1`` and the twists match."""
    if not 0 < a < b:
        raise FamilyError(f"need 0 < a < b, got a={a}, b={b}")
    if k < 2 or l < 2:
        raise FamilyError(f"need k, l >= 2, got k={k}, l={l}")
    n = (b - a) * l + 1
    spec = SimpleCyclic(n, k)
    conf = Configuration(CompleteIntersection(b * l, spec.twists), spec)
    s = subcanonicity(*conf)
    closed = rational_limit_s(a, b, k, l)
    if s != closed:
        raise AssertionError(f"s={s} from the degrees disagrees with closed form {closed}")
    assert conf.ci.dim * b == conf.ci.N * a
    assert check_embedding_a(*conf) is not None
    return conf


def family_half_limit(n: int, m: int) -> Configuration:
    """``CI(2m+n-1; 2(n-1) repeated m+n-1 times)`` with a simple cyclic
    ``n``-cover of twist 2.  The deformed embedding is never a complete
    intersection; callers should confirm that with obstruction_report."""
    if n < 3 or m < 3:
        raise FamilyError(f"need n >= 3 and m >= 3, got n={n}, m={m}")
    conf = Configuration(CompleteIntersection(2 * m + n - 1, (2 * (n - 1),) * (m + n - 1)), SimpleCyclic(n, 2))
    assert check_embedding_b(*conf) is not None
    return conf


def half_limit_amgm_holds(n: int, m: int) -> bool:
    # (1 + 1/(m+n-1))^(m+n-1) < n, cleared of denominators
    e = m + n - 1
    return (m + n) ** e < n * e**e


def family_recipe(
    criterion: str,
    family: str,
    m: int,
    n: int,
    s: int,
    N: int,
    k: int = 2,
    l: Optional[int] = 2,
) -> Iterator[Configuration]:
    """Every multidegree completing ``(m, N, s)`` for which ``criterion`` holds.

    The recipe fixes the entries the criterion needs (twist matches or large
    trailing degrees) and the remaining entries range over all nondecreasing
    completions of the residual degree sum.
    """
    behavior = CRITERIA.get(criterion)
    if behavior is None:
        raise FamilyError(f"unknown criterion {criterion!r}")
    if family == CYCLIC:
        spec = SimpleCyclic(n, k)
        l = None
    elif family == ZNZ2:
        if l is None:
            raise FamilyError("znz2 recipes need l")
        spec = znz2(n, k, l)
    else:
        raise FamilyError(f"unknown family {family!r}")
    box = bound_box(criterion, family, m, n, s=s, k=k, l=l, N=N)
    if not box.contains(N, s, k):
        raise OutOfBoundBox(f"(m={m}, n={n}, k={k}, l={l}, N={N}, s={s}) lies outside {box}")
    r = N - m
    delta = N + s + 1 - spec.ram_twist
    tower: Optional[Tower] = default_tower(spec)
    for degrees in sorted(set(candidate_multidegrees(behavior, N, r, delta, spec, tower))):
        ci = CompleteIntersection(N, degrees)
        if behavior in classify(ci, spec).names:
            yield Configuration(ci, spec)
