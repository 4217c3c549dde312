"""Recursive (L, 1)-coloring driven by reducible configurations."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..coloring import Coloring, solve
from ..errors import ExtensionFailed, ListTooSmall, NotInClass
from ..plane_graph import PlaneGraph
from ..structure import in_class
from .configs import find_first
from .extend import extend, reduce

log = logging.getLogger(__name__)

BASE_SIZE = 6


@dataclass
class RecursionReport:
    used: Counter = field(default_factory=Counter)
    base_cases: int = 0
    anomalies: list[str] = field(default_factory=list)


def recursive_color(G: PlaneGraph, L: Mapping[int, Iterable[int]],
                    report: RecursionReport | None = None, check_class: bool = True) -> Coloring:
    """An ``(L, 1)``-coloring of a class member with lists of size at least 3.

    Lists are cut down to their three smallest colors first, so the
    reductions see exactly the sizes they were designed for.
    """
    if check_class:
        rep = in_class(G)
        if not rep.in_class:
            c4, c, e = rep.violations[0]
            raise NotInClass(f"4-cycle {c4} shares edge {e} with cycle {c}")
    short = [v for v in G.vertices if len(set(L.get(v, ()))) < 3]
    if short:
        raise ListTooSmall(f"vertex {short[0]} has fewer than 3 colors")
    L3 = {v: frozenset(sorted(set(L[v]))[:3]) for v in G.vertices}
    if report is None:
        report = RecursionReport()
    return _rec(G, L3, report, check_class)


def _rec(G: PlaneGraph, L, report: RecursionReport, check_class: bool) -> Coloring:
    if len(G) <= BASE_SIZE:
        report.base_cases += 1
        return _direct(G, L, report)
    cfg = find_first(G)
    if cfg is None:
        msg = f"PROOF_GAP: no reducible configuration in a class member with {len(G)} vertices"
        log.warning(msg)
        report.anomalies.append(msg + "\n" + G.to_text())
        return _direct(G, L, report)
    report.used[cfg.kind] += 1
    pi: dict[int, int] = {}
    for comp in reduce(G, cfg):
        if check_class:
            assert in_class(comp).in_class, "class membership lost under reduction"
        sub = {v: L[v] for v in comp.vertices}
        pi.update(_rec(comp, sub, report, check_class))
    return extend(G, cfg, pi, L, verify=False)


def _direct(G: PlaneGraph, L, report: RecursionReport) -> Coloring:
    pi = solve(G, L, 1)
    if pi is None:
        msg = "PROOF_GAP: a class member with 3-lists has no (L, 1)-coloring"
        report.anomalies.append(msg + "\n" + G.to_text())
        raise ExtensionFailed(msg)
    return pi
