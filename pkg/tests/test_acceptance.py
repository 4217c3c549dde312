"""Acceptance gate: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` or as a script.
"""

from __future__ import annotations

import random
import sys
import time
from collections import Counter
from pathlib import Path

import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import class_members, corpus_graphs  # noqa: E402
from defectcolor import generators as gen  # noqa: E402
from defectcolor.coloring import Prepared, check, is_choosable, random_lists, solve  # noqa: E402
from defectcolor.discharging import apply_rules, audit, initial_charge, replay  # noqa: E402
from defectcolor.plane_graph import PlaneGraph  # noqa: E402
from defectcolor.reducibility import KINDS, RecursionReport, find_all, recursive_color  # noqa: E402
from defectcolor.reducibility.oracle import oracle_verify  # noqa: E402
from defectcolor.structure import classify  # noqa: E402

from conftest import graph  # noqa: E402


def crit1():
    start = time.perf_counter()
    graphs = corpus_graphs()
    bad = [n for n, G in graphs.items() if initial_charge(G).total() != -20]
    secs = time.perf_counter() - start
    return len(graphs) >= 12 and not bad and secs < 1, f"{len(graphs)} fixtures, off={bad}, {secs:.2f}s"


def crit2():
    members = class_members()
    bad = [n for n, G in members.items() if apply_rules(G)[0].total() != -20]
    return not bad, f"{len(members)} class members, off={bad}"


def _uncovered_faces_explained(G, ledger) -> tuple[int, int, list]:
    """3-faces with R1 transfers, and whether the rest sit on an A1/A2/A3 configuration."""
    fed = {t.dst for t in ledger if t.rule.startswith("R1")}
    deg = G.degree
    covered, explained, unexplained = 0, 0, []
    for f in G.faces:
        if f.degree != 3 or len(set(f.vertices)) != 3:
            continue
        if ("f", f.id) in fed:
            covered += 1
            continue
        ds = sorted(deg(v) for v in f.vertices)
        cfg_vertices = {v for c in find_all(G, ("A1_smallDegree", "A2_adjacent3s", "A3_face344"))
                        for v in c.witness}
        # no R1 case: a vertex of degree <= 2, two 3-vertices, or a (3,4,4)-face
        if (ds[0] <= 2 or ds[:2] == [3, 3] or ds == [3, 4, 4]) and set(f.vertices) & cfg_vertices:
            explained += 1
        else:
            unexplained.append((f.id, ds))
    return covered, explained, unexplained


def crit3():
    problems, covered, explained = [], 0, 0
    for name, G in class_members().items():
        _, ledger = apply_rules(G)
        rep = audit(G)
        problems += [f"{name}: {p}" for p in replay(G, ledger) + rep.bound_violations]
        c, e, u = _uncovered_faces_explained(G, ledger)
        covered += c
        explained += e
        problems += [f"{name}: 3-face {fid} {ds} has no R1 case and no configuration" for fid, ds in u]
    detail = (f"{covered} ruled 3-faces receive exactly 4, {explained} unruled 3-faces all carry "
              f"A1/A2/A3, bound violations={len(problems)}")
    return not problems, detail + (f" first={problems[0]}" if problems else "")


def crit4():
    start = time.perf_counter()
    reports = [r for kind in KINDS for r in oracle_verify(kind, existence="solve", strict=False)]
    secs = time.perf_counter() - start
    failed = [r.template for r in reports if not r.ok]
    kinds = {r.kind for r in reports}
    cases = sum(r.cases for r in reports)
    ok = not failed and kinds == set(KINDS) and secs <= 600
    return ok, f"{len(kinds)} kinds, {len(reports)} templates, {cases} cases, failed={failed}, {secs:.0f}s"


def crit5():
    start = time.perf_counter()
    colored, problems = 0, []
    for name, G in class_members().items():
        if len(G) > 30:
            problems.append(f"{name} has {len(G)} vertices")
        rng = random.Random(f"acceptance:{name}")
        for _ in range(100):
            L = random_lists(G, 3, 9, rng)
            rep = RecursionReport()
            pi = recursive_color(G, L, rep)
            if rep.anomalies:
                problems.append(f"{name}: {rep.anomalies[0].splitlines()[0]}")
            elif not check(G, L, pi, 1):
                problems.append(f"{name}: invalid coloring")
            elif solve(G, L, 1) is None:
                problems.append(f"{name}: solve disagrees")
            else:
                colored += 1
    secs = time.perf_counter() - start
    return not problems and secs <= 300, f"{colored} colorings checked, problems={problems[:2]}, {secs:.0f}s"


def crit6():
    empty = [n for n, G in class_members().items() if not find_all(G)]
    return not empty, f"{len(class_members())} class members, without configuration={empty}"


def crit7():
    start = time.perf_counter()
    c5 = is_choosable(graph("c5"), 3, 1)
    k2 = is_choosable(graph("k2"), 1, 0)
    secs = time.perf_counter() - start
    same = k2.witness is not None and len({frozenset(x) for x in k2.witness.values()}) == 1
    ok = c5.choosable and not k2.choosable and same and secs < 60
    return ok, f"C5 (3,1): {c5.choosable} over {c5.cases} systems; K2 (1,0): {k2.choosable} witness {k2.witness}; {secs:.1f}s"


def _small_plane_graphs():
    out = []
    for g in graph_atlas_g():
        if 1 <= g.number_of_nodes() <= 5 and nx.is_connected(g) and nx.check_planarity(g)[0]:
            out.append(PlaneGraph(gen.from_networkx(g)))
    return out


def _feasible_systems(G, d, masks):
    """Indices of list systems (one nonempty subset of {1,2,3} per vertex) admitting a coloring."""
    verts = G.vertices
    n = len(verts)
    containing = {c: [i for i, m in enumerate(masks) if m >> (c - 1) & 1] for c in (1, 2, 3)}
    feasible = bytearray(len(masks) ** n)
    for combo in _product([(1, 2, 3)] * n):
        pi = dict(zip(verts, combo))
        if any(sum(pi[u] == pi[v] for u in G.neighbors(v)) > d for v in verts):
            continue
        for idx in _product([containing[c] for c in combo]):
            code = 0
            for i in idx:
                code = code * len(masks) + i
            feasible[code] = 1
    return feasible


def _product(pools):
    from itertools import product
    return product(*pools)


def crit8():
    start = time.perf_counter()
    masks = list(range(1, 8))
    subsets = [frozenset(c for c in (1, 2, 3) if m >> (c - 1) & 1) for m in masks]
    graphs = _small_plane_graphs()
    checked, wrong = 0, []
    for G in graphs:
        prep = Prepared(G)
        verts = G.vertices
        for d in (0, 1, 2):
            feasible = _feasible_systems(G, d, masks)
            for code, idx in enumerate(_product([range(7)] * len(verts))):
                L = {v: subsets[i] for v, i in zip(verts, idx)}
                pi = prep.solve(L, d)
                if (pi is not None) != bool(feasible[code]) or (pi is not None and not check(G, L, pi, d)):
                    wrong.append((G.to_text(), d, L))
                checked += 1
    secs = time.perf_counter() - start
    return not wrong, f"{len(graphs)} graphs, {checked} (graph, d, lists) cases, mismatches={len(wrong)}, {secs:.0f}s"


CRITERIA = {
    1: ("Euler/weight identity", crit1),
    2: ("conservation after the rules", crit2),
    3: ("R1 face totals and transfer bounds", crit3),
    4: ("exhaustive extension oracles", crit4),
    5: ("recursive coloring at desk scale", crit5),
    6: ("configuration presence", crit6),
    7: ("brute-force choosability spot checks", crit7),
    8: ("cross-oracle soundness on small graphs", crit8),
}


def run(number: int) -> tuple[bool, str]:
    title, fn = CRITERIA[number]
    ok, detail = fn()
    return ok, f"{'PASS' if ok else 'FAIL'} criterion {number} ({title}): {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = run(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = Counter()
    for n in sorted(CRITERIA):
        ok, line = run(n)
        print(line, flush=True)
        results[ok] += 1
    sys.exit(1 if results[False] else 0)
