"""Bounded sweeps over (cover, complete intersection) configurations.

A configuration is fixed by the cover family parameters ``(n, k[, l])``, the
dimension ``m``, the ambient ``N`` and the subcanonicity ``s``; the
subcanonicity relation ``delta + ram_twist = N + s + 1`` then fixes the degree
sum, and the multidegree ranges over nondecreasing ``r``-tuples (``r = N - m``)
of integers >= 2 with that sum.

The necessary-condition boxes returned by :func:`bound_box` are used to skip
``(N, s)`` pairs that cannot carry a requested behaviour; with
``use_bounds=False`` the sweep ignores them, which is how
:func:`verify_bound_lemma` tests them.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from itertools import accumulate
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional

from .ci_geometry import CompleteIntersection
from .classifier import (
    BIRATIONAL,
    DEGREE_PRESERVED,
    EMBEDDING_A,
    EMBEDDING_B,
    HALVES,
    HALVES_SMOOTH,
    Tower,
    Verdict,
    classify,
    default_tower,
)
from .covers import CoverAnalysis, CoverSpec, CyclicProduct, SimpleCyclic, analyze, znz2
from .obstruction import CIObstruction, obstruction_report

CYCLIC = "cyclic"
ZNZ2 = "znz2"
PRODUCT = "product"

# criterion name accepted by bound_box -> behaviour tag in a Verdict
CRITERIA = {
    EMBEDDING_A: EMBEDDING_A,
    EMBEDDING_B: EMBEDDING_B,
    BIRATIONAL: BIRATIONAL,
    DEGREE_PRESERVED: DEGREE_PRESERVED,
    "Halving": HALVES,
    HALVES: HALVES,
    HALVES_SMOOTH: HALVES_SMOOTH,
}


class UnsupportedCombination(ValueError):
    pass


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class BoundBox:
    """Admissible region for ``N`` (and ``k``) at fixed ``m, n, s``.

    ``N_max`` and ``k_max`` are None when they depend on data not supplied.
    An empty box has ``N_min > N_max``.
    """

    N_min: int
    N_max: Optional[int]
    s_min: Optional[int]
    k_min: Optional[int] = None
    k_max: Optional[int] = None

    @property
    def empty(self) -> bool:
        return self.N_max is not None and self.N_min > self.N_max

    def contains(self, N: int, s: int, k: Optional[int] = None) -> bool:
        if N < self.N_min or (self.N_max is not None and N > self.N_max):
            return False
        if self.s_min is not None and s < self.s_min:
            return False
        if k is not None:
            if self.k_min is not None and k < self.k_min:
                return False
            if self.k_max is not None and k > self.k_max:
                return False
        return True


def bound_box(
    criterion: str,
    family: str,
    m: int,
    n: int,
    s: Optional[int] = None,
    k: Optional[int] = None,
    l: Optional[int] = None,
    N: Optional[int] = None,
) -> BoundBox:
    """Necessary conditions on ``N`` for an s-subcanonical ``phi`` (so every
    twist is >= 2) to satisfy ``criterion``.

    ``n`` is the order of the cyclic factor; for ``znz2`` the cover has degree
    ``2n``.  ``N`` only matters for the halving box, where the upper bound on
    ``k`` depends on it.
    """
    crit = CRITERIA.get(criterion)
    if crit is None:
        raise UnsupportedCombination(f"unknown criterion {criterion!r}")

    if family == CYCLIC:
        if crit == EMBEDDING_A:
            s_min = (n - 1) * (n + 2) - (m + n)
            N_max = None if s is None else 2 * (m + n) + s - (n - 1) * (n + 2) - 1
            return BoundBox(m + n - 1, N_max, s_min)
        if crit == EMBEDDING_B:
            s_min = 2 * m * (n - 2) + n * (2 * n - 3)
            N_max = None if s is None else 2 * (2 * m + n - 1) - 2 * (n - 1) * (m + n) + s + 1
            return BoundBox(2 * m + n - 1, N_max, s_min)
        if crit == BIRATIONAL:
            f = n // 2
            s_min = 2 * (n - 1) * (f + 1) - (m + f) - 1
            N_max = None if s is None else 2 * (m + f) - 2 * (n - 1) * (f + 1) + s + 1
            return BoundBox(m + f, N_max, s_min)
        if crit == DEGREE_PRESERVED:
            if k is None or s is None:
                raise UnsupportedCombination("degree-preserved box needs k and s")
            N_max = 2 * m + s + 1 - k * (n - 1)
            if k < 3:
                return BoundBox(m + 1, m, None, k_min=3)
            N_min = max(_ceil_div(s + 1 + m * (k - 1) - k * (n - 1), k - 2), m + 1)
            return BoundBox(N_min, N_max, None, k_min=3)
        raise UnsupportedCombination(f"no bound for {criterion} on simple cyclic covers")

    if family == ZNZ2:
        if crit == EMBEDDING_A:
            s_min = 2 * n * n - m
            N_max = None if s is None else 2 * (m + 2 * n - 1) - 2 * n * (n + 1) + s + 1
            return BoundBox(m + 2 * n - 1, N_max, s_min)
        if crit == EMBEDDING_B:
            s_min = 2 * m * (n - 1) + n * (2 * n - 1)
            N_max = None if s is None else 2 * (2 * m + 2 * n - 1) - 2 * n * (m + 2 * n) + s + 1
            return BoundBox(2 * m + 2 * n - 1, N_max, s_min)
        if crit == BIRATIONAL:
            s_min = 2 * n * n + n - m - 1
            N_max = None if s is None else 2 * m - 2 * n * n + s + 1
            return BoundBox(m + n, N_max, s_min)
        if crit == DEGREE_PRESERVED:
            if k is None or l is None or s is None:
                raise UnsupportedCombination("degree-preserved box needs k, l and s")
            ram = l + k * (n - 1)
            N_max = 2 * m + s + 1 - ram
            if k < 3 or l < 3:
                return BoundBox(m + 1, m, None, k_min=3)
            N_min = max(
                _ceil_div(m * (k - 1) + s + 1 - ram, k - 2),
                _ceil_div(m * (l - 1) + s + 1 - ram, l - 2),
                m + 1,
            )
            return BoundBox(N_min, N_max, None, k_min=3)
        if crit in (HALVES, HALVES_SMOOTH):
            if l is None:
                raise UnsupportedCombination("halving box needs l")
            s_min = 2 * l + (n - 1) * (2 * l + 1) - (m + 2)
            N_max = None if s is None else 2 * (m + 1) + s + 1 - 2 * l - (n - 1) * (2 * l + 1)
            k_max = None
            if s is not None and N is not None:
                k_max = (2 * (m + 1) + s + 1 - N) // (n - 1)
            return BoundBox(m + 1, N_max, s_min, k_min=2 * l + 1, k_max=k_max)
        raise UnsupportedCombination(f"no bound for {criterion} on Z_n x Z_2 covers")

    raise UnsupportedCombination(f"no bounds for family {family!r}")


def in_box(criterion, family, m, n, N, s, k=None, l=None) -> bool:
    box = bound_box(criterion, family, m, n, s=s, k=k, l=l, N=N)
    return box.contains(N, s, k)


# -- multidegree generation ------------------------------------------------


def nondecreasing_tuples(total: int, length: int, lows=None, hi: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Nondecreasing ``length``-tuples summing to ``total``.

    ``lows`` gives a per-position lower bound (default 2 everywhere) and
    ``hi`` a common upper bound.  Output is in lexicographic order.
    """
    if length == 0:
        if total == 0:
            yield ()
        return
    if lows is None:
        lows = [2] * length
    L = list(accumulate(lows, max))
    # suffix[j] = L[j] + ... + L[-1]
    suffix = list(accumulate(reversed(L)))[::-1] + [0]
    if total < suffix[0]:
        return
    if hi is not None and (L[-1] > hi or total > length * hi):
        return

    def min_rest(i: int, x: int) -> int:
        # cheapest completion of positions i+1.. when position i holds x
        j = max(bisect_left(L, x, i + 1), i + 1)
        return (j - i - 1) * x + suffix[j]

    prefix: list[int] = []

    def rec(i: int, prev: int, rem: int):
        left = length - i
        if left == 1:
            if rem >= max(prev, L[i]) and (hi is None or rem <= hi):
                yield (*prefix, rem)
            return
        x = max(prev, L[i])
        if hi is not None:
            x = max(x, rem - (left - 1) * hi)
        upper = rem // left
        if hi is not None:
            upper = min(upper, hi)
        while x <= upper:
            if x + min_rest(i, x) > rem:
                break
            prefix.append(x)
            yield from rec(i + 1, x, rem - x)
            prefix.pop()
            x += 1

    yield from rec(0, L[0], total)


def _merge(a, b) -> tuple[int, ...]:
    return tuple(sorted((*a, *b)))


def candidate_multidegrees(
    behavior: Optional[str], N: int, r: int, delta: int, spec: CoverSpec, tower: Optional[Tower]
) -> Iterator[tuple[int, ...]]:
    """Superset of the multidegrees on which ``behavior`` can hold.

    Generation uses only the structure of the criterion itself (which entries
    must be large, which must be small); results are re-checked by classify.
    """
    twists = spec.twists
    n = spec.degree
    if behavior is None:
        yield from nondecreasing_tuples(delta, r)
    elif behavior == DEGREE_PRESERVED:
        yield from nondecreasing_tuples(delta, r, hi=twists[0] - 1)
    elif behavior == BIRATIONAL:
        f = n // 2
        if r > f - 1:
            lows = [2] * (r - f) + [max(2, twists[-1])] * f
            yield from nondecreasing_tuples(delta, r, lows)
    elif behavior == EMBEDDING_A:
        rest = r - len(twists)
        if rest >= 0:
            for beta in nondecreasing_tuples(delta - sum(twists), rest):
                yield _merge(twists, beta)
    elif behavior == EMBEDDING_B:
        if 2 * r > N + n - 2:
            a = 2 * r + 2 - n - N
            lows = [2] * (a - 1) + [max(2, twists[-1])] * (r - a + 1)
            yield from nondecreasing_tuples(delta, r, lows)
    elif behavior in (HALVES, HALVES_SMOOTH):
        if tower is not None and tower.outer_twists[0] > 2 * tower.inner_l:
            lows = [2] * (r - 1) + [max(2, tower.inner_l)]
            yield from nondecreasing_tuples(delta, r, lows, hi=tower.outer_twists[0] - 1)
    else:
        raise ValueError(f"unknown behaviour {behavior!r}")


def delta_window(behavior: Optional[str], N: int, r: int, spec: CoverSpec, tower: Optional[Tower]):
    """``(lo, hi)`` bounds on the degree sum of any multidegree produced by
    :func:`candidate_multidegrees`, or None when there is none.  ``hi`` is
    None when unbounded."""
    twists = spec.twists
    n = spec.degree
    top = max(2, twists[-1])
    if behavior is None:
        return 2 * r, None
    if behavior == DEGREE_PRESERVED:
        cap = twists[0] - 1
        return (2 * r, r * cap) if cap >= 2 else None
    if behavior == BIRATIONAL:
        f = n // 2
        return (2 * (r - f) + f * top, None) if r > f - 1 else None
    if behavior == EMBEDDING_A:
        rest = r - len(twists)
        return (sum(twists) + 2 * rest, None) if rest >= 0 else None
    if behavior == EMBEDDING_B:
        if 2 * r <= N + n - 2:
            return None
        a = 2 * r + 2 - n - N
        return 2 * (a - 1) + (r - a + 1) * top, None
    if behavior in (HALVES, HALVES_SMOOTH):
        if tower is None or tower.outer_twists[0] <= 2 * tower.inner_l:
            return None
        cap = tower.outer_twists[0] - 1
        low = 2 * (r - 1) + max(2, tower.inner_l)
        return (low, r * cap) if cap >= max(2, tower.inner_l) else None
    raise ValueError(f"unknown behaviour {behavior!r}")


def distinct_permutations(items) -> Iterator[tuple[int, ...]]:
    counts = Counter(items)
    keys = sorted(counts)
    size = len(items)
    buf: list[int] = []

    def rec():
        if len(buf) == size:
            yield tuple(buf)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                buf.append(key)
                yield from rec()
                buf.pop()
                counts[key] += 1

    yield from rec()


# -- sweeps ----------------------------------------------------------------


def _check_range(name, rng):
    if rng is None:
        return None
    lo, hi = rng
    if lo > hi:
        raise ValueError(f"{name} range {lo}..{hi} is empty")
    return (int(lo), int(hi))


@dataclass(frozen=True)
class EnumFilter:
    """What to sweep.

    ``family`` is ``cyclic`` (uses ``n_range``, ``k_range``), ``znz2`` (also
    ``l_range``; ``n`` is the cyclic order, cover degree ``2n``) or
    ``product`` (a fixed ``factors`` pattern).  ``behaviors`` keeps
    configurations whose verdict has any of the listed behaviours; None keeps
    everything.
    """

    family: str
    m_range: tuple[int, int]
    s_range: tuple[int, int]
    n_range: tuple[int, int] = (2, 2)
    k_range: tuple[int, int] = (2, 2)
    l_range: Optional[tuple[int, int]] = None
    N_range: Optional[tuple[int, int]] = None
    behaviors: Optional[frozenset] = None
    require_complete_series: bool = True
    dedupe: bool = True
    factors: Optional[tuple[tuple[int, int], ...]] = None

    def __post_init__(self):
        for name in ("m_range", "s_range", "n_range", "k_range", "l_range", "N_range"):
            object.__setattr__(self, name, _check_range(name, getattr(self, name)))
        if self.family not in (CYCLIC, ZNZ2, PRODUCT):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == ZNZ2 and self.l_range is None:
            object.__setattr__(self, "l_range", (2, 2))
        if self.family == PRODUCT and not self.factors:
            raise ValueError("product family needs a factors pattern")
        if self.m_range[0] < 2:
            raise ValueError("dimension m must be >= 2")
        if self.behaviors is not None:
            names = frozenset(CRITERIA.get(b, b) for b in self.behaviors)
            unknown = names - set(CRITERIA.values())
            if unknown:
                raise ValueError(f"unknown behaviours {sorted(unknown)}")
            object.__setattr__(self, "behaviors", names)

    def covers(self) -> Iterator[tuple[int, int, Optional[int], CoverSpec]]:
        """``(n, k, l, spec)`` in sweep order."""
        if self.family == PRODUCT:
            spec = CyclicProduct(self.factors)
            (n, k), *rest = spec.factors
            l = rest[0][1] if len(rest) == 1 and rest[0][0] == 2 else None
            yield n, k, l, spec
            return
        for n in range(self.n_range[0], self.n_range[1] + 1):
            for k in range(self.k_range[0], self.k_range[1] + 1):
                if self.family == CYCLIC:
                    yield n, k, None, SimpleCyclic(n, k)
                else:
                    for l in range(self.l_range[0], self.l_range[1] + 1):
                        yield n, k, l, znz2(n, k, l)


class EnumRow(NamedTuple):
    n: int
    k: int
    l: Optional[int]
    ci: CompleteIntersection
    spec: CoverSpec
    analysis: CoverAnalysis
    verdict: Verdict
    obstruction: Optional[CIObstruction]


def _family_for_bounds(filt: EnumFilter, spec: CoverSpec) -> Optional[str]:
    if isinstance(spec, SimpleCyclic):
        return CYCLIC
    if default_tower(spec) is not None and len(spec.factors) == 2:
        return ZNZ2
    return None


def _may_hold(behaviors, family, m, n, N, s, k, l) -> bool:
    for b in behaviors:
        try:
            if in_box(b, family, m, n, N, s, k=k, l=l):
                return True
        except UnsupportedCombination:
            return True
    return False


def enumerate_configs(filt: EnumFilter, use_bounds: bool = True, with_obstruction: bool = True) -> Iterator[EnumRow]:
    """Stream every configuration in ``filt`` satisfying the subcanonicity
    relation and the behaviour filter, ordered by ``(m, n, k, l, N, s, d)``."""
    s_lo, s_hi = filt.s_range
    for m in range(filt.m_range[0], filt.m_range[1] + 1):
        for n, k, l, spec in filt.covers():
            twists = spec.twists
            if filt.require_complete_series and twists[0] < 2:
                continue
            ram = spec.ram_twist
            tower = default_tower(spec)
            bound_family = _family_for_bounds(filt, spec) if use_bounds and twists[0] >= 2 else None
            # delta >= 2r forces N <= 2m + s + 1 - ram
            N_lo = m + 1
            N_hi = 2 * m + s_hi + 1 - ram
            if filt.N_range is not None:
                N_lo = max(N_lo, filt.N_range[0])
                N_hi = min(N_hi, filt.N_range[1])
            wanted = [None] if filt.behaviors is None else sorted(filt.behaviors)
            for N in range(N_lo, N_hi + 1):
                r = N - m
                windows = [w for w in (delta_window(b, N, r, spec, tower) for b in wanted) if w is not None]
                if not windows:
                    continue
                d_lo = min(w[0] for w in windows)
                d_hi = None if any(w[1] is None for w in windows) else max(w[1] for w in windows)
                first = max(s_lo, d_lo + ram - N - 1)
                last = s_hi if d_hi is None else min(s_hi, d_hi + ram - N - 1)
                for s in range(first, last + 1):
                    if filt.behaviors is not None and bound_family is not None:
                        if not _may_hold(filt.behaviors, bound_family, m, n, N, s, k, l):
                            continue
                    delta = N + s + 1 - ram
                    if filt.behaviors is None:
                        cands = nondecreasing_tuples(delta, r)
                    else:
                        pool = set()
                        for b in filt.behaviors:
                            pool.update(candidate_multidegrees(b, N, r, delta, spec, tower))
                        cands = sorted(pool)
                    for degrees in cands:
                        ci = CompleteIntersection(N, degrees)
                        verdict = classify(ci, spec)
                        if filt.behaviors is not None and not (verdict.names & filt.behaviors):
                            continue
                        analysis = analyze(ci, spec)
                        assert analysis.s == s
                        obstruction = obstruction_report(ci, spec) if with_obstruction else None
                        row = EnumRow(n, k, l, ci, spec, analysis, verdict, obstruction)
                        if filt.dedupe:
                            yield row
                        else:
                            for _ in distinct_permutations(degrees):
                                yield row


# -- bound lemma verification ---------------------------------------------


@dataclass(frozen=True)
class SampleBox:
    """Finite parameter box for :func:`verify_bound_lemma`.

    With ``s_slack`` set, each ``(m, n, k, l)`` point is swept over
    ``ram_twist - m <= s <= s_min + s_slack``, where ``s_min`` is the box's
    own lower bound on ``s``.  The lower end is unconditional (``delta >= 2r``
    and ``N >= m + 1``), so every ``s`` below ``s_min`` is still examined.
    ``s_range``, if given, clips the window.
    """

    n_range: tuple[int, int]
    m_range: tuple[int, int]
    k_range: tuple[int, int]
    s_range: Optional[tuple[int, int]] = None
    l_range: Optional[tuple[int, int]] = None
    s_slack: Optional[int] = None

    def __post_init__(self):
        if self.s_range is None and self.s_slack is None:
            raise ValueError("sample box needs s_range or s_slack")


@dataclass
class BoundReport:
    criterion: str
    family: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _s_window(criterion, family, m, n, k, l, spec, box: SampleBox):
    lo = spec.ram_twist - m
    hi = None
    if box.s_slack is not None:
        probe = bound_box(criterion, family, m, n, k=k, l=l, s=lo)
        # smallest s at which the N-interval is nonempty (N_max grows with s)
        ref = lo + probe.N_min - probe.N_max
        if probe.s_min is not None:
            ref = max(ref, probe.s_min)
        hi = ref + box.s_slack
    if box.s_range is not None:
        lo = max(lo, box.s_range[0])
        hi = box.s_range[1] if hi is None else min(hi, box.s_range[1])
    return lo, hi


def verify_bound_lemma(criterion: str, family: str, sample_box: SampleBox) -> BoundReport:
    """Sweep ``sample_box`` without bound pruning and report every
    configuration satisfying ``criterion`` that falls outside its box."""
    behavior = CRITERIA[criterion]
    report = BoundReport(criterion, family)
    probe = EnumFilter(
        family=family,
        m_range=sample_box.m_range,
        s_range=(0, 0),
        n_range=sample_box.n_range,
        k_range=sample_box.k_range,
        l_range=sample_box.l_range,
    )
    for m in range(sample_box.m_range[0], sample_box.m_range[1] + 1):
        for n, k, l, spec in probe.covers():
            if spec.twists[0] < 2:
                continue
            s_lo, s_hi = _s_window(criterion, family, m, n, k, l, spec, sample_box)
            if s_lo > s_hi:
                continue
            filt = EnumFilter(
                family=family,
                m_range=(m, m),
                s_range=(s_lo, s_hi),
                n_range=(n, n),
                k_range=(k, k),
                l_range=None if l is None else (l, l),
                behaviors=frozenset({behavior}),
            )
            for row in enumerate_configs(filt, use_bounds=False, with_obstruction=False):
                report.checked += 1
                s, N = row.analysis.s, row.ci.N
                if not in_box(criterion, family, m, n, N, s, k=k, l=l):
                    report.violations.append((row.ci, row.spec, s))
    return report


def ordering_key(row: EnumRow):
    return (row.analysis.m, row.n, row.k, -1 if row.l is None else row.l, row.ci.N, row.analysis.s, row.ci.degrees)


__all__ = [
    "BoundBox",
    "BoundReport",
    "EnumFilter",
    "EnumRow",
    "SampleBox",
    "UnsupportedCombination",
    "bound_box",
    "candidate_multidegrees",
    "enumerate_configs",
    "in_box",
    "nondecreasing_tuples",
    "verify_bound_lemma",
]
