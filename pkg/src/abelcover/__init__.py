"""Numerical deformation theory of abelian covers of complete intersections."""

from .ci_geometry import CompleteIntersection, canonical_twist, h0, make_ci
from .classifier import Tower, Verdict, classify
from .covers import CoverAnalysis, CyclicProduct, ExplicitSplit, SimpleCyclic, analyze, znz2
from .enumeration import BoundBox, EnumFilter, bound_box, enumerate_configs, verify_bound_lemma
from .families import family_codim3_limit1, family_half_limit, family_rational_limit, family_recipe
from .obstruction import CIObstruction, obstruction_report, solve_ci

__all__ = [
    "BoundBox",
    "CIObstruction",
    "CompleteIntersection",
    "CoverAnalysis",
    "CyclicProduct",
    "EnumFilter",
    "ExplicitSplit",
    "SimpleCyclic",
    "Tower",
    "Verdict",
    "analyze",
    "bound_box",
    "canonical_twist",
    "classify",
    "enumerate_configs",
    "family_codim3_limit1",
    "family_half_limit",
    "family_rational_limit",
    "family_recipe",
    "h0",
    "make_ci",
    "obstruction_report",
    "solve_ci",
    "verify_bound_lemma",
    "znz2",
]
