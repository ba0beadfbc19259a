"""Set-theoretic solutions: validation, presentations, T map, class, frozen words.

A solution on ``X = {x_1..x_n}`` is stored as two lists of permutations with
``S(x_i, x_j) = (x_{g_i(j)}, x_{f_j(i)})``. Indices are 0-based internally.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .algebra import Permutation, generated_group, orbits, perm_power


class ParseError(ValueError):
    """Malformed input file; carries the offending line number."""

    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


@dataclass(frozen=True)
class Solution:
    f: tuple[Permutation, ...]
    g: tuple[Permutation, ...]

    def __post_init__(self):
        n = len(self.f)
        if len(self.g) != n or any(p.n != n for p in self.f + self.g):
            raise ValueError("f and g must be n permutations of size n")

    @classmethod
    def from_images(cls, f: Sequence[Sequence[int]], g: Sequence[Sequence[int]]) -> Solution:
        """Build from 1-based image lists, one per generator."""
        return cls(tuple(Permutation.from_images(r) for r in f),
                   tuple(Permutation.from_images(r) for r in g))

    @classmethod
    def from_map(cls, n: int, smap) -> Solution:
        """Build from a callable ``smap(i, j) -> (k, l)`` on 0-based indices."""
        g = [[0] * n for _ in range(n)]
        f = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                k, l = smap(i, j)
                g[i][j] = k
                f[j][i] = l
        return cls(tuple(Permutation(tuple(r)) for r in f),
                   tuple(Permutation(tuple(r)) for r in g))

    @property
    def n(self) -> int:
        return len(self.f)

    def __call__(self, i: int, j: int) -> tuple[int, int]:
        return self.g[i](j), self.f[j](i)

    @cached_property
    def f_inv(self) -> tuple[Permutation, ...]:
        return tuple(p.inverse() for p in self.f)

    @cached_property
    def g_inv(self) -> tuple[Permutation, ...]:
        return tuple(p.inverse() for p in self.g)

    @cached_property
    def T(self) -> Permutation:
        """``T(x) = f_x^{-1}(x)``."""
        return Permutation(tuple(self.f_inv[x](x) for x in range(self.n)))

    @cached_property
    def class_m(self) -> int:
        return solution_class(self)

    @cached_property
    def f_orbits(self) -> list[tuple[int, ...]]:
        return orbits(self.f, self.n)

    @cached_property
    def f_group(self) -> frozenset[Permutation]:
        return generated_group(self.f, self.n)

    def relabel(self, alpha: Permutation) -> Solution:
        """The equivalent solution ``S' = (a x a) S (a x a)^{-1}``."""
        ainv = alpha.inverse()

        def smap(i, j):
            k, l = self(ainv(i), ainv(j))
            return alpha(k), alpha(l)

        return Solution.from_map(self.n, smap)


# -- validation ------------------------------------------------------------

@dataclass
class ValidationReport:
    failures: list[tuple[str, tuple]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        if self.ok:
            return "valid non-degenerate symmetric solution"
        lines = []
        for axiom, w in self.failures:
            lines.append(f"{axiom} fails at " + " ".join(str(i + 1) for i in w))
        return "\n".join(lines)


def validate(s: Solution, max_witnesses: int = 5) -> ValidationReport:
    """Check involutivity and the braid relation, collecting witnesses."""
    rep = ValidationReport()
    n = s.n
    bad = 0
    for x, y in itertools.product(range(n), repeat=2):
        if s(*s(x, y)) != (x, y):
            rep.failures.append(("involutivity", (x, y)))
            bad += 1
            if bad >= max_witnesses:
                break
    bad = 0
    for x, y, z in itertools.product(range(n), repeat=3):
        # S12 S23 S12 vs S23 S12 S23, rightmost applied first
        a, b = s(x, y)
        b, c = s(b, z)
        a, b = s(a, b)
        lhs = (a, b, c)
        b, c = s(y, z)
        a, b = s(x, b)
        b, c = s(b, c)
        if lhs != (a, b, c):
            rep.failures.append(("braid", (x, y, z)))
            bad += 1
            if bad >= max_witnesses:
                break
    return rep


def require_valid(s: Solution) -> None:
    rep = validate(s, max_witnesses=1)
    if not rep.ok:
        raise ValueError(f"invalid solution: {rep}")


# -- presentations ---------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    """Defining relations ``x_i x_j = x_k x_l`` as 0-based quadruples."""

    n: int
    relations: tuple[tuple[int, int, int, int], ...]
    trivial_relations: tuple[tuple[int, int], ...] = ()

    def __str__(self) -> str:
        return format_presentation(self)


def to_presentation(s: Solution) -> Presentation:
    require_valid(s)
    rels = []
    triv = []
    for i, j in itertools.product(range(s.n), repeat=2):
        k, l = s(i, j)
        if (k, l) == (i, j):
            triv.append((i, j))
        elif (i, j) < (k, l):
            rels.append((i, j, k, l))
    return Presentation(s.n, tuple(rels), tuple(triv))


def from_presentation(p: Presentation) -> Solution:
    """Reconstruct the solution whose structure group has presentation ``p``."""
    n = p.n
    if len(p.relations) != n * (n - 1) // 2:
        raise ValueError(f"expected {n * (n - 1) // 2} relations, got {len(p.relations)}")
    smap: dict[tuple[int, int], tuple[int, int]] = {}
    for i, j, k, l in p.relations:
        for word in ((i, j), (k, l)):
            if word in smap:
                raise ValueError(f"word x{word[0] + 1}x{word[1] + 1} appears twice")
        if (i, j) == (k, l):
            raise ValueError("relation with identical sides")
        smap[(i, j)] = (k, l)
        smap[(k, l)] = (i, j)
    for word in p.trivial_relations:
        if word in smap:
            raise ValueError(f"word x{word[0] + 1}x{word[1] + 1} is both trivial and in a relation")
    for i, j in itertools.product(range(n), repeat=2):
        smap.setdefault((i, j), (i, j))
    try:
        s = Solution.from_map(n, lambda i, j: smap[(i, j)])
    except ValueError as e:
        raise ValueError(f"reconstructed tables are not bijective: {e}") from None
    rep = validate(s)
    if not rep.ok:
        raise ValueError(f"reconstructed solution is invalid: {rep}")
    return s


# -- T map, class, frozen elements -----------------------------------------

def solution_class(s: Solution) -> int:
    """Least m >= 1 with ``f_x f_{T(x)} ... f_{T^{m-1}(x)} = Id`` for all x."""
    n = s.n
    cap = 2 * n * reduce(math.lcm, (p.order() for p in s.f), 1)
    ident = Permutation.identity(n)
    prods = [ident] * n
    pts = list(range(n))
    for m in range(1, cap + 1):
        prods = [prods[x] * s.f[pts[x]] for x in range(n)]
        pts = [s.T(p) for p in pts]
        if all(p == ident for p in prods):
            return m
    raise RuntimeError(f"class search exceeded cap {cap}; solution is likely invalid")


def frozen_word(s: Solution, i: int, m: int | None = None) -> tuple[int, ...]:
    """``T^{m-1}(x_i) ... T(x_i) x_i`` as a tuple of 0-based generator indices."""
    m = s.class_m if m is None else m
    return tuple(perm_power(s.T, k)(i) for k in range(m - 1, -1, -1))


def is_decomposable(s: Solution, cross_check: bool | None = None) -> tuple[bool, list[tuple[int, ...]]]:
    """Decide decomposability via transitivity of ``<f_i, g_i>``.

    For ``n <= 6`` (or when ``cross_check`` is set) the literal definition is
    also run, and a disagreement raises ``AssertionError``.
    """
    orb = orbits(s.f + s.g, s.n)
    dec = len(orb) > 1
    if cross_check is None:
        cross_check = s.n <= 6
    if cross_check:
        literal = decomposable_by_definition(s)
        if literal is not dec:
            raise AssertionError(
                f"orbit test says decomposable={dec}, definition says {literal}")
    return dec, orb


def _invariant(s: Solution, y: frozenset[int]) -> bool:
    for a in y:
        for b in y:
            k, l = s(a, b)
            if k not in y or l not in y:
                return False
    return True


def _nondegenerate_restriction(s: Solution, y: frozenset[int]) -> bool:
    # invariance gives maps Y -> Y; injectivity on a finite set makes them
    # bijective, and the symmetric axioms restrict from X
    for a in y:
        if {s.g[a](b) for b in y} != y or {s.f[a](b) for b in y} != y:
            return False
    return True


def decomposable_by_definition(s: Solution) -> bool:
    """Search all bipartitions for two non-degenerate invariant subsets."""
    n = s.n
    everything = frozenset(range(n))
    for r in range(1, n // 2 + 1):
        for part in itertools.combinations(range(n), r):
            y = frozenset(part)
            z = everything - y
            if (_invariant(s, y) and _invariant(s, z)
                    and _nondegenerate_restriction(s, y)
                    and _nondegenerate_restriction(s, z)):
                return True
    return False


@dataclass(frozen=True)
class SolutionAnalysis:
    T: Permutation
    class_m: int
    frozen: tuple[tuple[int, ...], ...]
    decomposable: bool
    orbits: tuple[tuple[int, ...], ...]
    satisfies_condition_C: bool


def analyze(s: Solution) -> SolutionAnalysis:
    require_valid(s)
    m = s.class_m
    dec, orb = is_decomposable(s)
    return SolutionAnalysis(
        T=s.T,
        class_m=m,
        frozen=tuple(frozen_word(s, i, m) for i in range(s.n)),
        decomposable=dec,
        orbits=tuple(orb),
        satisfies_condition_C=satisfies_condition_c(s),
    )


def satisfies_condition_c(s: Solution) -> bool:
    """``f_x f_y = Id`` (and ``g_x g_y = Id``) whenever ``S(x,y) = (x,y)``."""
    ident = Permutation.identity(s.n)
    for x, y in itertools.product(range(s.n), repeat=2):
        if s(x, y) == (x, y):
            if s.f[x] * s.f[y] != ident or s.g[x] * s.g[y] != ident:
                return False
    return True


def are_equivalent(s1: Solution, s2: Solution) -> Permutation | None:
    """Find ``alpha`` with ``S2(alpha x, alpha y) = (alpha x alpha)(S1(x, y))``."""
    if s1.n != s2.n:
        return None
    n = s1.n
    pairs = list(itertools.product(range(n), repeat=2))
    triv1 = sum(1 for x, y in pairs if s1(x, y) == (x, y))
    triv2 = sum(1 for x, y in pairs if s2(x, y) == (x, y))
    if triv1 != triv2:
        return None
    for images in itertools.permutations(range(n)):
        ok = True
        for x, y in pairs:
            k, l = s1(x, y)
            if s2(images[x], images[y]) != (images[k], images[l]):
                ok = False
                break
        if ok:
            return Permutation(images)
    return None


# -- text formats ----------------------------------------------------------

def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def parse_solution(text: str) -> Solution:
    n = None
    rows: dict[str, dict[int, list[int]]] = {"f": {}, "g": {}}
    for no, toks in _lines(text):
        key = toks[0]
        try:
            if key == "n":
                n = int(toks[1])
                if n < 1 or len(toks) != 2:
                    raise ParseError("bad size line", no)
            elif key in rows:
                if n is None:
                    raise ParseError("`n` line must come first", no)
                i = int(toks[1])
                imgs = [int(t) for t in toks[2:]]
                if not 1 <= i <= n or len(imgs) != n:
                    raise ParseError(f"expected `{key} <i> <{n} images>`", no)
                if sorted(imgs) != list(range(1, n + 1)):
                    raise ParseError(f"{key}_{i} is not a bijection of 1..{n}", no)
                if i in rows[key]:
                    raise ParseError(f"duplicate {key}_{i}", no)
                rows[key][i] = imgs
            else:
                raise ParseError(f"unknown record {key!r}", no)
        except (IndexError, ValueError) as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(str(e), no) from None
    if n is None:
        raise ParseError("missing `n` line")
    for key in rows:
        missing = set(range(1, n + 1)) - rows[key].keys()
        if missing:
            raise ParseError(f"missing {key} rows: {sorted(missing)}")
    return Solution.from_images([rows["f"][i] for i in range(1, n + 1)],
                                [rows["g"][i] for i in range(1, n + 1)])


def format_solution(s: Solution) -> str:
    out = [f"n {s.n}"]
    for key, perms in (("f", s.f), ("g", s.g)):
        for i, p in enumerate(perms):
            out.append(f"{key} {i + 1} " + " ".join(map(str, p.one_based())))
    return "\n".join(out) + "\n"


def parse_presentation(text: str) -> Presentation:
    n = None
    rels = []
    triv = []
    maxidx = 0
    for no, toks in _lines(text):
        try:
            if toks[0] == "n":
                n = int(toks[1])
            elif toks[0] == "rel":
                if len(toks) != 6 or toks[3] != "=":
                    raise ParseError("expected `rel <i> <j> = <k> <l>`", no)
                q = tuple(int(t) - 1 for t in (toks[1], toks[2], toks[4], toks[5]))
                rels.append(q)
                maxidx = max(maxidx, *q)
            elif toks[0] == "triv":
                if len(toks) != 3:
                    raise ParseError("expected `triv <i> <j>`", no)
                t = (int(toks[1]) - 1, int(toks[2]) - 1)
                triv.append(t)
                maxidx = max(maxidx, *t)
            else:
                raise ParseError(f"unknown record {toks[0]!r}", no)
        except ValueError as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(str(e), no) from None
    if n is None:
        n = maxidx + 1
    if any(min(q) < 0 or max(q) >= n for q in rels + triv):
        raise ParseError("generator index out of range")
    return Presentation(n, tuple(rels), tuple(triv))


def format_presentation(p: Presentation) -> str:
    out = [f"n {p.n}"]
    for i, j, k, l in p.relations:
        out.append(f"rel {i + 1} {j + 1} = {k + 1} {l + 1}")
    for i, j in p.trivial_relations:
        out.append(f"triv {i + 1} {j + 1}")
    return "\n".join(out) + "\n"
