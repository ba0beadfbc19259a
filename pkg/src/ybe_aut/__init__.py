"""Automorphisms of structure groups of involutive non-degenerate solutions
of the set-theoretic Yang-Baxter equation, via the bijective 1-cocycle."""

from .algebra import Permutation
from .automorphisms import (
    apply_automorphism,
    check_membership,
    closure_check,
    enumerate_generalized_permutation,
    quotient_group,
    search_bounded,
)
from .cocycle import GroupElement, StructureGroup
from .solution import Solution, parse_solution, validate

__all__ = [
    "Permutation", "Solution", "StructureGroup", "GroupElement", "parse_solution", "validate",
    "check_membership", "apply_automorphism", "enumerate_generalized_permutation",
    "search_bounded", "closure_check", "quotient_group",
]
