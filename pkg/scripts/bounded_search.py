"""Bounded search for Im_pi with timing, closure and row-sum summaries.

Example: python scripts/bounded_search.py cyclic5 --bound 1
Set YBE_AUT_WORKERS to fan the search out over processes.
"""

import argparse
import os
import time
from dataclasses import dataclass

from ybe_aut import catalog
from ybe_aut.algebra import format_matrix, mat_is_generalized_permutation
from ybe_aut.automorphisms import closure_check, search_bounded
from ybe_aut.cli import load_solution
from ybe_aut.cocycle import StructureGroup


@dataclass
class SearchConfig:
    solution: str
    bound: int = 1
    component_wise: bool = False
    workers: int = 1
    show: int = 10


def run(cfg: SearchConfig) -> list:
    s = catalog.NAMED[cfg.solution]() if cfg.solution in catalog.NAMED else load_solution(cfg.solution)
    G = StructureGroup(s)
    t = time.perf_counter()
    found = search_bounded(G, cfg.bound, cfg.component_wise, cfg.workers)
    dt = time.perf_counter() - t
    genperm = sum(1 for m in found if mat_is_generalized_permutation(m) is not None)
    uniform = sum(1 for m in found if len({sum(r) for r in m}) == 1)
    print(f"{cfg.solution}: n={G.n} class={G.m} bound={cfg.bound} found={len(found)} "
          f"in {dt:.2f}s")
    print(f"  signed permutation matrices: {genperm}; uniform row sums: {uniform}")
    if found:
        print(f"  {closure_check(G, found)}")
    for m in found[: cfg.show]:
        print(format_matrix(m), end="\n\n")
    return found


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("solution", help=f"builtin name {sorted(catalog.NAMED)} or a solution file")
    p.add_argument("--bound", type=int, default=1)
    p.add_argument("--component-wise", action="store_true")
    p.add_argument("--show", type=int, default=10)
    a = p.parse_args()
    run(SearchConfig(a.solution, a.bound, a.component_wise,
                     int(os.environ.get("YBE_AUT_WORKERS", "1")), a.show))


if __name__ == "__main__":
    main()
