"""Numerical complete-intersection test for a deformed embedding.

If the general deformation of ``phi`` embeds ``X_t`` as a complete intersection
of multidegree ``(d'_1, ..., d'_r)`` then::

    sum d'_i = delta + a          (a = ram_twist, from K_X)
    prod d'_i = deg(pi) * prod d_i   (from L^m)

This module decides that Diophantine system exactly.  An empty solution set
means no deformed embedding can be a complete intersection of codimension r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ci_geometry import CompleteIntersection
from .covers import CoverSpec

DEFAULT_BUDGET = 10**6


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search exceeded node budget of {nodes}")
        self.nodes = nodes


@dataclass(frozen=True)
class CIObstruction:
    S: int
    P: int
    r: int
    status: str  # "Solvable" | "Infeasible" | "BudgetExceeded"
    reason: str | None = None  # "AMGM" | "ExhaustedSearch" when Infeasible
    witnesses: tuple[tuple[int, ...], ...] = ()

    def __str__(self):
        if self.status == "Solvable":
            return "Solvable[" + " ".join("(" + ",".join(map(str, w)) + ")" for w in self.witnesses) + "]"
        if self.status == "Infeasible":
            return f"Infeasible({self.reason})"
        return "SearchBudgetExceeded"


def ci_constraints(ci: CompleteIntersection, spec: CoverSpec) -> tuple[int, int, int]:
    return ci.delta + spec.ram_twist, spec.degree * ci.total_deg, ci.r


def amgm_infeasible(S: int, P: int, r: int) -> bool:
    """True when ``S^r < P * r^r``: no positive reals with sum S have product P."""
    return S**r < P * r**r


def solve_ci(S: int, P: int, r: int, min_part: int = 2, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All nondecreasing r-tuples of integers >= min_part with sum S and product P.

    Depth-first over nondecreasing prefixes; each node is pruned by the
    remaining sum, divisibility of the remaining product, and AM-GM on the
    residual subproblem.  Raises SearchBudgetExceeded after ``budget`` nodes.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    out: list[tuple[int, ...]] = []
    nodes = 0
    prefix: list[int] = []

    def rec(lo: int, s_rem: int, p_rem: int, left: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(budget)
        if left == 1:
            if s_rem == p_rem and s_rem >= lo:
                out.append((*prefix, s_rem))
            return
        # every later part is >= x, so x*left <= s_rem and x**left <= p_rem
        hi = s_rem // left
        x = lo
        while x <= hi:
            if x**left > p_rem:
                break
            if p_rem % x == 0:
                s_next, p_next = s_rem - x, p_rem // x
                if not amgm_infeasible(s_next, p_next, left - 1):
                    prefix.append(x)
                    rec(x, s_next, p_next, left - 1)
                    prefix.pop()
            x += 1

    if S >= min_part * r and P >= 1 and not amgm_infeasible(S, P, r):
        rec(min_part, S, P, r)
    for w in out:
        assert sum(w) == S and math.prod(w) == P and list(w) == sorted(w) and w[0] >= min_part
    return out


def obstruction_report(
    ci: CompleteIntersection, spec: CoverSpec, min_part: int = 2, budget: int = DEFAULT_BUDGET
) -> CIObstruction:
    S, P, r = ci_constraints(ci, spec)
    if amgm_infeasible(S, P, r):
        return CIObstruction(S, P, r, "Infeasible", "AMGM")
    try:
        found = solve_ci(S, P, r, min_part=min_part, budget=budget)
    except SearchBudgetExceeded:
        return CIObstruction(S, P, r, "BudgetExceeded")
    if not found:
        return CIObstruction(S, P, r, "Infeasible", "ExhaustedSearch")
    return CIObstruction(S, P, r, "Solvable", witnesses=tuple(found))
