"""Defective list coloring: checking, exact solving and brute-force choosability.

A coloring ``pi`` of ``G`` is an ``(L, d)``-coloring when every vertex takes
a color from its list and at most ``d`` of its neighbours share that color.
Lists and colorings are plain dicts keyed by vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import ParseError, PartialColoring, TooLarge
from .kernels import solve_csr

ListAssignment = dict[int, frozenset[int]]
Coloring = dict[int, int]

DEFAULT_BUDGET = 2_000_000


@dataclass
class Violation:
    vertex: int
    kind: str  # "list" or "defect"
    detail: tuple = ()

    def __str__(self) -> str:
        if self.kind == "list":
            return f"vertex {self.vertex}: color {self.detail[0]} not in its list"
        return f"vertex {self.vertex}: {len(self.detail)} neighbours share its color ({', '.join(map(str, self.detail))})"


@dataclass
class CheckResult:
    ok: bool
    violations: list[Violation] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _vertices(G) -> list[int]:
    return list(G.vertices)


def check(G, L: Mapping[int, Iterable[int]] | None, pi: Mapping[int, int], d: int) -> CheckResult:
    """Validate a total coloring; ``L=None`` skips list membership."""
    missing = [v for v in _vertices(G) if v not in pi]
    if missing:
        raise PartialColoring(f"{len(missing)} vertices uncolored, e.g. {missing[0]}")
    bad = []
    for v in _vertices(G):
        c = pi[v]
        if L is not None and c not in L[v]:
            bad.append(Violation(v, "list", (c,)))
        same = tuple(u for u in G.neighbors(v) if pi[u] == c)
        if len(same) > d:
            bad.append(Violation(v, "defect", same))
    return CheckResult(not bad, bad)


class Prepared:
    """Adjacency of ``G`` in CSR form plus a fixed vertex order, reusable across list assignments."""

    __slots__ = ("verts", "index", "indptr", "indices", "order")

    def __init__(self, G, order: list[int] | None = None):
        self.verts = _vertices(G)
        if order is None:
            order = sorted(self.verts, key=lambda v: (-G.degree(v), v))
        self.index = {v: i for i, v in enumerate(self.verts)}
        self.indptr, self.indices = [0], []
        for v in self.verts:
            self.indices.extend(self.index[u] for u in G.neighbors(v))
            self.indptr.append(len(self.indices))
        self.order = [self.index[v] for v in order]

    def solve(self, L: Mapping[int, Iterable[int]], d: int) -> Coloring | None:
        if not self.verts:
            return {}
        lptr, lcol = [0], []
        for v in self.verts:
            lcol.extend(sorted(set(L[v])))
            lptr.append(len(lcol))
        result = solve_csr(self.indptr, self.indices, lptr, lcol, self.order, d)
        if result is None:
            return None
        return dict(zip(self.verts, result))


def solve(G, L: Mapping[int, Iterable[int]], d: int, order: list[int] | None = None) -> Coloring | None:
    """Exact backtracking search; ``None`` means no ``(L, d)``-coloring exists.

    Vertices are tried by decreasing degree then id, colors by value, so the
    result is reproducible.
    """
    return Prepared(G, order).solve(L, d)


def induced_assignment(G, S: Iterable[int], pi: Mapping[int, int], L: Mapping[int, Iterable[int]]) -> ListAssignment:
    """Lists on ``S`` with the colors of already-colored outside neighbours removed."""
    S = set(S)
    out = {}
    for v in S:
        used = {pi[u] for u in G.neighbors(v) if u not in S and u in pi}
        out[v] = frozenset(L[v]) - used
    return out


def uniform_lists(G, k: int) -> ListAssignment:
    lst = frozenset(range(1, k + 1))
    return {v: lst for v in _vertices(G)}


def random_lists(G, k: int, universe: int, rng: random.Random) -> ListAssignment:
    colors = list(range(1, universe + 1))
    return {v: frozenset(rng.sample(colors, k)) for v in _vertices(G)}


# -- choosability ---------------------------------------------------------------

@dataclass
class ChoosabilityResult:
    choosable: bool
    witness: ListAssignment | None
    cases: int

    def __bool__(self) -> bool:
        return self.choosable


@lru_cache(maxsize=None)
def _count_systems(n: int, k: int, used: int, universe: int) -> int:
    if n == 0:
        return 1
    total = 0
    for new in range(0, k + 1):
        if used + new > universe or k - new > used:
            continue
        total += comb(used, k - new) * _count_systems(n - 1, k, used + new, universe)
    return total


def canonical_list_systems(n: int, k: int, universe: int) -> Iterator[tuple[frozenset[int], ...]]:
    """Sequences of ``n`` ``k``-subsets of ``1..universe`` with colors numbered by first use.

    Every list system is a color-renaming of at least one yielded system.
    """
    from itertools import combinations

    def rec(i: int, used: int, acc: list):
        if i == n:
            yield tuple(acc)
            return
        for new in range(0, k + 1):
            if used + new > universe or k - new > used:
                continue
            fresh = tuple(range(used + 1, used + new + 1))
            for old in combinations(range(1, used + 1), k - new):
                acc.append(frozenset(old + fresh))
                yield from rec(i + 1, used + new, acc)
                acc.pop()

    yield from rec(0, 0, [])


def count_list_systems(n: int, k: int, universe: int) -> int:
    return _count_systems(n, k, 0, universe)


def is_choosable(G, k: int, d: int, budget: int = DEFAULT_BUDGET) -> ChoosabilityResult:
    """Exhaustive ``(k, d)``-choosability test over canonical list systems.

    Only lists of size exactly ``k`` are tried (larger lists only add
    options), drawn from ``k * |V|`` colors.
    """
    if k < 1:
        raise ValueError("k must be positive")
    verts = sorted(_vertices(G))
    n = len(verts)
    universe = k * n
    total = count_list_systems(n, k, universe)
    if total > budget:
        raise TooLarge(f"{total} list systems exceed the budget of {budget}")
    cases = 0
    prep = Prepared(G)
    order = [prep.verts[i] for i in prep.order]
    for system in canonical_list_systems(n, k, universe):
        cases += 1
        L = dict(zip(order, system))
        if prep.solve(L, d) is None:
            return ChoosabilityResult(False, L, cases)
    return ChoosabilityResult(True, None, cases)


# -- list file format -----------------------------------------------------------

def parse_lists(text: str, source: str | None = None) -> ListAssignment:
    out: ListAssignment = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            raise ParseError("expected 'v: c1 c2 ...'", lineno, 1, source)
        head, _, tail = line.partition(":")
        try:
            v = int(head)
            colors = frozenset(int(t) for t in tail.split())
        except ValueError as exc:
            raise ParseError(str(exc), lineno, 1, source) from None
        out[v] = colors
    return out


def read_lists(path: str | Path) -> ListAssignment:
    path = Path(path)
    return parse_lists(path.read_text(), source=str(path))


def format_lists(L: Mapping[int, Iterable[int]]) -> str:
    return "".join(f"{v}: {' '.join(map(str, sorted(c)))}\n" for v, c in sorted(L.items()))


def format_coloring(pi: Mapping[int, int]) -> str:
    return "".join(f"{v}: {c}\n" for v, c in sorted(pi.items()))
