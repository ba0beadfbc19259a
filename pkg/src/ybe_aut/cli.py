"""Command line front end.

Exit codes: 0 accepted / found / valid, 1 rejected / none / invalid,
2 input error. Solutions are read from files or named with ``builtin:<name>``.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import catalog
from .algebra import (
    format_matrix,
    format_vector,
    mat_is_unimodular,
    parse_matrix,
)
from .automorphisms import (
    check_membership,
    closure_check,
    enumerate_generalized_permutation,
    image_of,
    induced_quotient_automorphism,
    matrix_form_holds,
    quotient_group,
    search_bounded,
)
from .cocycle import StructureGroup, parse_word
from .garside import delta, display_word, divisor_lattice
from .solution import (
    ParseError,
    Solution,
    analyze,
    are_equivalent,
    format_presentation,
    format_solution,
    from_presentation,
    parse_presentation,
    parse_solution,
    to_presentation,
    validate,
)

OK, NO, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    paths: list[str] = field(default_factory=list)
    mode: str | None = None  # "genperm" or "bounded"
    bound: int | None = None
    oracle: bool = False
    dump_lattice: bool = False
    component_wise: bool = False
    matrix: str | None = None
    word: str | None = None
    seed: int = 0
    cases: int = 1000
    workers: int = 1

    def __post_init__(self):
        if self.mode == "bounded" and (self.bound is None or self.bound < 1):
            raise InputError("--bounded needs B >= 1")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None


def load_solution(source: str, check: bool = True) -> Solution:
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        if name not in catalog.NAMED:
            raise InputError(f"unknown builtin {name!r}; choose from {sorted(catalog.NAMED)}")
        return catalog.NAMED[name]()
    try:
        s = parse_solution(_read(source))
    except ParseError as e:
        where = f" (line {e.line})" if e.line else ""
        raise InputError(f"{source}{where}: {e}") from None
    if check:
        rep = validate(s)
        if not rep.ok:
            raise InputError(f"{source}: not a valid solution\n{rep}")
    return s


def load_matrix(path: str, n: int):
    try:
        m = parse_matrix(_read(path))
    except ValueError as e:
        raise InputError(f"{path}: {e}") from None
    if len(m) != n or any(len(r) != n for r in m):
        raise InputError(f"{path}: expected a {n}x{n} matrix")
    if not mat_is_unimodular(m):
        raise InputError(f"{path}: matrix is not in GL_{n}(Z)")
    return m


def _print_matrices(mats) -> None:
    for k, m in enumerate(mats, 1):
        print(f"# matrix {k}")
        print(format_matrix(m))


# -- commands ---------------------------------------------------------------

def cmd_validate(cfg: RunConfig) -> int:
    s = load_solution(cfg.paths[0], check=False)
    rep = validate(s)
    print(rep)
    return OK if rep.ok else NO


def cmd_info(cfg: RunConfig) -> int:
    s = load_solution(cfg.paths[0])
    a = analyze(s)
    G = StructureGroup(s)
    print(f"n {s.n}")
    print(f"class {a.class_m}")
    print(f"T {a.T}")
    for i, w in enumerate(a.frozen):
        print(f"theta_{i + 1} " + " ".join(f"x{k + 1}" for k in w))
    orbits = " ".join("{" + ",".join(str(i + 1) for i in o) + "}" for o in a.orbits)
    print(f"decomposable {'yes' if a.decomposable else 'no'} orbits {orbits}")
    print(f"Delta {display_word(G, delta(G))}")
    lattice = divisor_lattice(G) if s.n <= 12 else None
    if lattice is not None:
        print(f"|Div(Delta)| {len(lattice)}")
    print(f"|W| {a.class_m ** s.n}")
    if cfg.dump_lattice and lattice is not None:
        for k, e in enumerate(lattice.elements):
            print(f"div {k} {format_vector(e.vec)} {display_word(G, e)}")
    if cfg.oracle:
        from .oracle import build_table, expected_counts, oracle_counts, oracle_delta
        L = 4 if s.n <= 4 else 3
        table = build_table(s, L)
        counts = oracle_counts(table)
        print(f"oracle counts {counts} expected {expected_counts(s.n, L)}")
        d = oracle_delta(table)
        agree = d is not None and G.element_from_word((i, 1) for i in d) == delta(G)
        print(f"oracle Delta {'agrees' if agree else 'DISAGREES'}")
        if counts != expected_counts(s.n, L) or not agree:
            return NO
    return OK


def cmd_presentation(cfg: RunConfig) -> int:
    s = load_solution(cfg.paths[0])
    print(format_presentation(to_presentation(s)), end="")
    return OK


def cmd_from_presentation(cfg: RunConfig) -> int:
    try:
        p = parse_presentation(_read(cfg.paths[0]))
        s = from_presentation(p)
    except ParseError as e:
        where = f" (line {e.line})" if e.line else ""
        raise InputError(f"{cfg.paths[0]}{where}: {e}") from None
    except ValueError as e:
        print(f"not a solution: {e}")
        return NO
    print(format_solution(s), end="")
    return OK


def cmd_check_matrix(cfg: RunConfig) -> int:
    s = load_solution(cfg.paths[0])
    G = StructureGroup(s)
    sigma = load_matrix(cfg.paths[1], s.n)
    v = check_membership(G, sigma)
    if not v.accepted:
        print("rejected")
        for i, j, w in v.failures:
            print(f"witness (i,j)=({i + 1},{j + 1}) transported w_{i + 1} = {format_vector(w)}"
                  f" != w_{s.f[j](i) + 1}")
        return NO
    print("accepted")
    for j, p in enumerate(v.column_perms):
        print(f"f'_{j + 1} {p}")
    print(f"matrix identity {'holds' if matrix_form_holds(G, sigma, v) else 'FAILS'}")
    return OK


def cmd_search(cfg: RunConfig) -> int:
    s = load_solution(cfg.paths[0])
    G = StructureGroup(s)
    if cfg.mode == "genperm":
        mats = enumerate_generalized_permutation(G)
    else:
        mats = search_bounded(G, cfg.bound, cfg.component_wise, cfg.workers)
    print(f"found {len(mats)}")
    _print_matrices(mats)
    if mats:
        print(f"# closure {closure_check(G, mats)}")
    return OK if mats else NO


def cmd_apply(cfg: RunConfig) -> int:
    s = load_solution(cfg.paths[0])
    G = StructureGroup(s)
    sigma = load_matrix(cfg.paths[1], s.n)
    try:
        word = parse_word(cfg.word, s.n)
    except ValueError as e:
        raise InputError(str(e)) from None
    if not check_membership(G, sigma).accepted:
        print("rejected: matrix is not in Im_pi")
        return NO
    print(display_word(G, image_of(G, sigma, G.element_from_word(word))))
    return OK


def cmd_quotient(cfg: RunConfig) -> int:
    s = load_solution(cfg.paths[0])
    G = StructureGroup(s)
    try:
        W = quotient_group(G)
    except ValueError as e:
        raise InputError(str(e)) from None
    print(f"|W| {W.order}")
    print(f"axioms {'ok' if W.spot_check(seed=cfg.seed) else 'FAIL'}")
    if cfg.matrix:
        sigma = load_matrix(cfg.matrix, s.n)
        if not check_membership(G, sigma).accepted:
            print("rejected: matrix is not in Im_pi")
            return NO
        phi = induced_quotient_automorphism(G, sigma, W, seed=cfg.seed)
        moved = sum(1 for u in W.elements() if phi(u) != u) if W.order <= 4096 else None
        print("induced map well defined")
        if moved is not None:
            print(f"cosets moved {moved}")
    return OK


def cmd_equivalent(cfg: RunConfig) -> int:
    s1, s2 = load_solution(cfg.paths[0]), load_solution(cfg.paths[1])
    alpha = are_equivalent(s1, s2)
    if alpha is None:
        print("not equivalent")
        return NO
    print(f"equivalent via {alpha}")
    return OK


def cmd_fuzz(cfg: RunConfig) -> int:
    from .fuzz import fuzz_solution
    s = load_solution(cfg.paths[0])
    rep = fuzz_solution(s, cfg.cases, cfg.seed)
    print(rep)
    for line in rep.examples:
        print(f"  {line}")
    return OK if rep.ok else NO


COMMANDS = {
    "validate": cmd_validate,
    "info": cmd_info,
    "presentation": cmd_presentation,
    "from-presentation": cmd_from_presentation,
    "check-matrix": cmd_check_matrix,
    "search": cmd_search,
    "apply": cmd_apply,
    "quotient": cmd_quotient,
    "equivalent": cmd_equivalent,
    "fuzz": cmd_fuzz,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ybe-aut", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sol = "solution file or builtin:<name>"
    sub.add_parser("validate").add_argument("solution", help=sol)
    info = sub.add_parser("info")
    info.add_argument("solution", help=sol)
    info.add_argument("--oracle", action="store_true", help="cross-check with word enumeration")
    info.add_argument("--dump-lattice", action="store_true")
    sub.add_parser("presentation").add_argument("solution", help=sol)
    sub.add_parser("from-presentation").add_argument("presentation")
    cm = sub.add_parser("check-matrix")
    cm.add_argument("solution", help=sol)
    cm.add_argument("matrix")
    se = sub.add_parser("search")
    se.add_argument("solution", help=sol)
    mode = se.add_mutually_exclusive_group(required=True)
    mode.add_argument("--genperm", action="store_true")
    mode.add_argument("--bounded", type=int, metavar="B")
    se.add_argument("--component-wise", action="store_true")
    ap = sub.add_parser("apply")
    ap.add_argument("solution", help=sol)
    ap.add_argument("matrix")
    ap.add_argument("word", help='e.g. "x1 x2^-1"')
    qu = sub.add_parser("quotient")
    qu.add_argument("solution", help=sol)
    qu.add_argument("--matrix")
    qu.add_argument("--seed", type=int, default=0)
    eq = sub.add_parser("equivalent")
    eq.add_argument("solution1")
    eq.add_argument("solution2")
    fz = sub.add_parser("fuzz")
    fz.add_argument("solution", help=sol)
    fz.add_argument("--seed", type=int, default=0)
    fz.add_argument("--cases", type=int, default=1000)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    paths = [getattr(ns, k) for k in ("solution", "presentation", "solution1", "solution2", "matrix")
             if getattr(ns, k, None) is not None and not (k == "matrix" and ns.command == "quotient")]
    mode = None
    if ns.command == "search":
        mode = "genperm" if ns.genperm else "bounded"
    return RunConfig(
        command=ns.command,
        paths=paths,
        mode=mode,
        bound=getattr(ns, "bounded", None),
        oracle=getattr(ns, "oracle", False),
        dump_lattice=getattr(ns, "dump_lattice", False),
        component_wise=getattr(ns, "component_wise", False),
        matrix=getattr(ns, "matrix", None) if ns.command == "quotient" else None,
        word=getattr(ns, "word", None),
        seed=getattr(ns, "seed", 0),
        cases=getattr(ns, "cases", 1000),
        workers=int(os.environ.get("YBE_AUT_WORKERS", "1")),
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return INPUT_ERROR if e.code else OK
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
