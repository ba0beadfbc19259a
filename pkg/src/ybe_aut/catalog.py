"""Small named solutions used throughout the examples and tests."""

from __future__ import annotations

from .algebra import Permutation
from .solution import Solution


def _cyc(n, *cycles):
    return Permutation.from_cycles(n, *cycles)


def four_class2() -> Solution:
    """Indecomposable class-2 solution on four points."""
    g = (_cyc(4, (2, 3)), _cyc(4, (1, 4)), _cyc(4, (1, 2, 4, 3)), _cyc(4, (1, 3, 4, 2)))
    f = (_cyc(4, (2, 4)), _cyc(4, (1, 3)), _cyc(4, (1, 4, 3, 2)), _cyc(4, (1, 2, 3, 4)))
    return Solution(f, g)


def permutation_solution(f: Permutation, g: Permutation | None = None) -> Solution:
    """All ``f_i = f`` and all ``g_i = g`` (default ``f^{-1}``)."""
    g = f.inverse() if g is None else g
    return Solution((f,) * f.n, (g,) * f.n)


def cyclic(n: int) -> Solution:
    """Permutation solution with ``f = (1,2,..,n)`` and ``g = f^{-1}``."""
    return permutation_solution(_cyc(n, tuple(range(1, n + 1))))


def g2() -> Solution:
    """``<x1, x2 | x1^2 = x2^2>``."""
    return cyclic(2)


def g3() -> Solution:
    """``<x1,x2,x3 | x1x3 = x2^2, x2x1 = x3^2, x3x2 = x1^2>``, class 3."""
    return cyclic(3)


def z_g2() -> Solution:
    """Decomposable solution ``f_i = g_i = (2,3)`` on three points."""
    return permutation_solution(_cyc(3, (2, 3)), _cyc(3, (2, 3)))


def trivial(n: int) -> Solution:
    ident = Permutation.identity(n)
    return Solution((ident,) * n, (ident,) * n)


NAMED = {
    "four": four_class2,
    "g2": g2,
    "g3": g3,
    "zg2": z_g2,
    "cyclic5": lambda: cyclic(5),
    "trivial2": lambda: trivial(2),
    "trivial3": lambda: trivial(3),
    "trivial4": lambda: trivial(4),
}
