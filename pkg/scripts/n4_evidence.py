"""Evidence on four-element indecomposable solutions: is every bounded member a signed permutation?

Covers the indecomposable n=4 solutions available in the catalog (the class-2
example and the class-4 cyclic permutation solution) plus any given files.
"""

import sys
import time

from ybe_aut import catalog
from ybe_aut.algebra import mat_is_generalized_permutation
from ybe_aut.automorphisms import search_bounded
from ybe_aut.cli import load_solution
from ybe_aut.cocycle import StructureGroup
from ybe_aut.solution import is_decomposable

BOUNDS = (1, 2, 3)


def main(paths):
    sols = {"four_class2": catalog.four_class2(), "cyclic4": catalog.cyclic(4)}
    sols.update({p: load_solution(p) for p in paths})
    for name, s in sols.items():
        G = StructureGroup(s)
        dec, _ = is_decomposable(s)
        for B in BOUNDS:
            t = time.perf_counter()
            found = search_bounded(G, B)
            other = [m for m in found if mat_is_generalized_permutation(m) is None]
            print(f"{name}: class={G.m} decomposable={dec} B={B} found={len(found)} "
                  f"non-signed-permutation={len(other)} ({time.perf_counter() - t:.1f}s)")


if __name__ == "__main__":
    main(sys.argv[1:])
