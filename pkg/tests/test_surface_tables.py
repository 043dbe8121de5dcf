"""Surface rows (dimension two).

The low-codimension rows are printed with N = 4 although their multidegree has
three or four entries, so they do not describe a surface in P^4.  The printed
s still equals delta + ram - N - 1 evaluated at the printed N, so they are
reproduced as formal values; K^2 coefficients are compared against
n * prod(d) and the mismatches are recorded here.
"""

import math

import pytest

from abelcover.ci_geometry import CodimTooLarge, make_ci
from abelcover.classifier import EMBEDDING_B, classify
from abelcover.covers import SimpleCyclic, analyze
from abelcover.obstruction import obstruction_report

# n, k, N, s, d, printed K^2 coefficient, computed coefficient
LOW_CODIM = [
    (4, 2, 4, 13, (2, 4, 6), 192, 192),
    (4, 3, 4, 22, (3, 6, 9), 148, 648),
    (5, 2, 4, 23, (2, 4, 6, 8), 1152, 1920),
    (5, 3, 4, 37, (3, 6, 9, 12), 5832, 9720),
]

NON_CI = [
    (3, 2, 6, 13, (4, 4, 4, 4), 768),
    (3, 2, 6, 14, (4, 4, 4, 5), 960),
]


@pytest.mark.parametrize("n, k, N, s, d, printed, computed", LOW_CODIM)
def test_low_codim_rows_as_computed(n, k, N, s, d, printed, computed):
    with pytest.raises(CodimTooLarge):
        make_ci(N, d)
    spec = SimpleCyclic(n, k)
    assert sum(d) + spec.ram_twist - N - 1 == s
    assert n * math.prod(d) == computed
    assert (printed == computed) == (k == 2 and n == 4)


@pytest.mark.parametrize("n, k, N, s, d, coeff", NON_CI)
def test_non_ci_surface_rows(n, k, N, s, d, coeff):
    ci, spec = make_ci(N, d), SimpleCyclic(n, k)
    a = analyze(ci, spec)
    assert ci.surface_mode and a.m == 2
    assert (a.s, a.Lm, a.Km) == (s, coeff, coeff * s**2)
    assert EMBEDDING_B in classify(ci, spec).names
    assert str(obstruction_report(ci, spec)) == "Infeasible(AMGM)"
