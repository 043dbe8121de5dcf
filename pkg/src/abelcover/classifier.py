"""Deformation behaviour of ``phi = i o pi`` for a split cover of a complete intersection.

Each criterion is a decidable inequality on the multidegree ``d_1 <= ... <= d_r``
and the twists ``k_1 <= ... <= k_{n-1}`` (all indices 1-based).  A criterion
that holds yields a :class:`Certificate` naming the indices that witnessed it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .ci_geometry import CompleteIntersection
from .covers import CoverSpec, CyclicProduct, SimpleCyclic

DEGREE_PRESERVED = "DegreePreserved"
BIRATIONAL = "Birational"
EMBEDDING_A = "EmbeddingA"
EMBEDDING_B = "EmbeddingB"
HALVES = "HalvesDegree"
HALVES_SMOOTH = "HalvesDegreeSmoothImage"

BEHAVIORS = (DEGREE_PRESERVED, BIRATIONAL, EMBEDDING_A, EMBEDDING_B, HALVES, HALVES_SMOOTH)

# strongest first
SUMMARY_ORDER = (
    ("Embedding", (EMBEDDING_A, EMBEDDING_B)),
    ("Birational", (BIRATIONAL,)),
    ("HalvesDegree", (HALVES, HALVES_SMOOTH)),
    ("DegreePreserved", (DEGREE_PRESERVED,)),
)
INCONCLUSIVE = "Inconclusive"


class NotATower(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    behavior: str
    witness: str
    indices: tuple[int, ...] = ()
    smooth_image: Optional[bool] = None


@dataclass(frozen=True)
class Tower:
    """A double cover with twist ``inner_l`` followed by a cover whose
    trace-zero module is pulled back from ``O_Y(-k'_j)``."""

    outer_twists: tuple[int, ...]
    inner_l: int

    def __post_init__(self):
        outer = tuple(sorted(self.outer_twists))
        object.__setattr__(self, "outer_twists", outer)
        if not outer:
            raise NotATower("outer cover must have degree >= 2 (total degree >= 4)")
        if outer[0] < 1 or self.inner_l < 1:
            raise NotATower("tower twists must be >= 1")

    @property
    def degree(self) -> int:
        return 2 * (len(self.outer_twists) + 1)

    @property
    def twists(self) -> tuple[int, ...]:
        l = self.inner_l
        return tuple(sorted((l, *self.outer_twists, *(k + l for k in self.outer_twists))))


@dataclass(frozen=True)
class CIStatus:
    kind: str  # "KnownCI_codim2" | "ExpectedCI" | "Unknown"
    multidegree: Optional[tuple[int, ...]] = None

    def __str__(self):
        if self.kind == "ExpectedCI":
            return f"ExpectedCI({','.join(map(str, self.multidegree))})"
        return self.kind


@dataclass(frozen=True)
class Verdict:
    behaviors: tuple[Certificate, ...]
    summary: str
    ci_status: CIStatus = field(default_factory=lambda: CIStatus("Unknown"))

    @property
    def names(self) -> frozenset[str]:
        return frozenset(c.behavior for c in self.behaviors)

    def get(self, behavior: str) -> Optional[Certificate]:
        for c in self.behaviors:
            if c.behavior == behavior:
                return c
        return None


def check_degree_preserved(ci: CompleteIntersection, spec: CoverSpec) -> Optional[Certificate]:
    k1 = spec.twists[0]
    if ci.degrees[-1] < k1:
        return Certificate(DEGREE_PRESERVED, f"d_{ci.r}={ci.degrees[-1]} < k_1={k1}", (ci.r, 1))
    return None


def check_birational(ci: CompleteIntersection, spec: CoverSpec) -> Optional[Certificate]:
    n = spec.degree
    half = n // 2
    if ci.r <= half - 1:
        return None
    idx = ci.r - half + 1
    top = spec.twists[-1]
    if ci.d(idx) >= top:
        return Certificate(BIRATIONAL, f"r={ci.r} > {half - 1}, d_{idx}={ci.d(idx)} >= k_{n - 1}={top}", (idx, n - 1))
    return None


def match_twists(degrees, twists) -> Optional[tuple[int, ...]]:
    """Indices ``l_1 < ... < l_{n-1}`` (1-based) with ``d_{l_j} = k_j``, or None.

    Both lists are sorted, so a greedy left-to-right scan finds a match
    whenever one exists.
    """
    out = []
    i = 0
    for t in twists:
        while i < len(degrees) and degrees[i] < t:
            i += 1
        if i == len(degrees) or degrees[i] != t:
            return None
        out.append(i + 1)
        i += 1
    return tuple(out)


def check_embedding_a(ci: CompleteIntersection, spec: CoverSpec) -> Optional[Certificate]:
    twists = spec.twists
    if ci.r < len(twists):
        return None
    match = match_twists(ci.degrees, twists)
    if match is None:
        return None
    pairs = ", ".join(f"d_{l}=k_{j}={t}" for j, (l, t) in enumerate(zip(match, twists), 1))
    return Certificate(EMBEDDING_A, pairs, match)


def check_embedding_b(ci: CompleteIntersection, spec: CoverSpec) -> Optional[Certificate]:
    n = spec.degree
    r, N = ci.r, ci.N
    if 2 * r <= N + n - 2:
        return None
    idx = 2 * r + 2 - n - N
    top = spec.twists[-1]
    if ci.d(idx) >= top:
        return Certificate(
            EMBEDDING_B, f"2r={2 * r} > N+n-2={N + n - 2}, d_{idx}={ci.d(idx)} >= k_{n - 1}={top}", (idx, n - 1)
        )
    return None


def check_halving(ci: CompleteIntersection, outer_twists, inner_l: int) -> Optional[Certificate]:
    """Degree-halving criterion for a tower (double cover, then an outer cover).

    Returns a certificate whose ``smooth_image`` says whether the deformed
    image is also guaranteed smooth.
    """
    tower = outer_twists if isinstance(outer_twists, Tower) else Tower(tuple(outer_twists), inner_l)
    l = tower.inner_l
    k1 = tower.outer_twists[0]
    dr = ci.degrees[-1]
    if not (k1 > max(2 * l, dr) and dr >= l):
        return None
    witness = f"k'_1={k1} > max(2l={2 * l}, d_r={dr}), d_r >= l={l}"
    if l in ci.degrees:
        s_idx = ci.degrees.index(l) + 1
        return Certificate(HALVES, witness + f"; d_{s_idx}=l", (s_idx,), smooth_image=True)
    if 2 * ci.r > ci.N and ci.d(2 * ci.r - ci.N) >= l:
        idx = 2 * ci.r - ci.N
        return Certificate(HALVES, witness + f"; 2r > N, d_{idx} >= l", (idx,), smooth_image=True)
    return Certificate(HALVES, witness, (), smooth_image=False)


def default_tower(spec: CoverSpec) -> Optional[Tower]:
    """Tower read off a Z_n x Z_2 product: the trailing order-2 factor is the
    inner double cover, the leading cyclic factor the outer one."""
    if isinstance(spec, CyclicProduct) and len(spec.factors) == 2 and spec.factors[1][0] == 2:
        (n, k), (_, l) = spec.factors
        return Tower(tuple(i * k for i in range(1, n)), l)
    return None


def expected_ci(ci: CompleteIntersection, spec: CoverSpec) -> Optional[tuple[int, ...]]:
    """Multidegree of the general deformed embedding when every branch twist
    ``kappa_j`` appears in the multidegree; replaces one copy of each
    ``kappa_j`` by ``n_j * kappa_j``."""
    if not isinstance(spec, (SimpleCyclic, CyclicProduct)):
        return None
    remaining = list(ci.degrees)
    replaced = []
    for n, kappa in spec.factors:
        if kappa not in remaining:
            return None
        remaining.remove(kappa)
        replaced.append(n * kappa)
    return tuple(sorted(remaining + replaced))


def classify(ci: CompleteIntersection, spec: CoverSpec, tower: Optional[Tower] = None) -> Verdict:
    certs = []
    for check in (check_degree_preserved, check_birational, check_embedding_a, check_embedding_b):
        cert = check(ci, spec)
        if cert is not None:
            certs.append(cert)

    if tower is None:
        tower = default_tower(spec)
    elif tower.twists != spec.twists:
        raise NotATower(f"tower twists {tower.twists} do not match cover twists {spec.twists}")
    if tower is not None:
        cert = check_halving(ci, tower, tower.inner_l)
        if cert is not None:
            certs.append(cert)
            if cert.smooth_image:
                certs.append(Certificate(HALVES_SMOOTH, cert.witness, cert.indices, True))

    names = {c.behavior for c in certs}
    summary = INCONCLUSIVE
    for label, members in SUMMARY_ORDER:
        if names.intersection(members):
            summary = label
            break

    status = CIStatus("Unknown")
    embeds = names & {EMBEDDING_A, EMBEDDING_B}
    if ci.r == 2 and EMBEDDING_A in names:
        status = CIStatus("KnownCI_codim2")
    elif embeds:
        target = expected_ci(ci, spec)
        if target is not None:
            status = CIStatus("ExpectedCI", target)
    return Verdict(tuple(certs), summary, status)
