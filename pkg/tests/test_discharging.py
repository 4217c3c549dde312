from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from defectcolor import generators as gen
from defectcolor.discharging import (
    RULE_IDS,
    apply_rules,
    audit,
    initial_charge,
    replay,
)
from defectcolor.errors import NotInClass
from defectcolor.plane_graph import PlaneGraph
from defectcolor.structure import classify, face_pattern

from conftest import class_members, corpus_graphs, graph, random_member


def reference_transfers(G):
    """Expected (src, dst, amount) triples, derived straight from the rule text."""
    S = classify(G)
    d = G.degree
    light = lambda v: d(v) == 4 and S[v].light4 is not None
    soft = lambda v: d(v) == 4 and S[v].soft4 is not None
    bad = lambda v: d(v) == 5 and S[v].bad5 is not None
    out = set()
    for f in G.faces:
        vs = f.vertices
        if len(set(vs)) != len(vs):
            continue
        if f.degree == 3:
            sent = None
            for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
                v1, v2, v3 = (vs[i] for i in perm)
                ds = (d(v1), d(v2), d(v3))
                if ds[0] == 3 and ds[1] == 4 and ds[2] >= 5:
                    sent = (0, 1, 3)
                elif ds[0] == 3 and ds[1] >= 5 and ds[2] >= 5:
                    sent = (0, 2, 2)
                elif ds[:2] == (4, 4) and ds[2] >= 5:
                    if light(v1):
                        sent = (0, 1, 3)
                    elif not light(v1) and not light(v2):
                        sent = (1, 1, 2)
                elif ds[0] == 4 and ds[1] >= 5 and ds[2] >= 5:
                    if bad(v2):
                        sent = (1, 1, 2)
                    elif not bad(v2) and not bad(v3):
                        sent = (0, 2, 2)
                elif min(ds) >= 5:
                    if bad(v1):
                        sent = (1, Q(3, 2), Q(3, 2))
                    elif not any(map(bad, (v1, v2, v3))):
                        sent = (Q(4, 3),) * 3
                if sent:
                    for v, a in zip((v1, v2, v3), sent):
                        if a:
                            out.add((v, ("f", f.id), Q(a)))
                    break
        elif f.degree == 4:
            for i, v in enumerate(vs):
                v1, v2 = vs[i - 1], vs[(i + 1) % 4]
                if d(v) >= 5:
                    amt = Q(1) if d(v1) >= 4 and d(v2) >= 4 else Q(4, 3)
                elif d(v) == 4 and S[v].weak4 is None:
                    if d(v1) == 3 and d(v2) == 3:
                        k = G.neighbors(v).index(v2)
                        opp = G.face_of_dart(v, G.neighbors(v)[(k + 2) % 4])
                        amt = Q(4, 3) if G.face_degree(opp) == 3 else Q(2, 3)
                    elif d(v1) >= 4 and d(v2) >= 4:
                        amt = Q(1) if soft(v1) or soft(v2) else Q(2, 3)
                    else:
                        amt = Q(2, 3)
                else:
                    continue
                out.add((v, ("f", f.id), amt))
    for u in G.vertices:
        if d(u) < 4:
            continue
        for v in G.neighbors(u):
            a, b = G.faces_at_edge(u, v)
            if d(v) != 3 or 3 in (G.face_degree(a), G.face_degree(b)):
                continue
            if S[v].t == 1:
                out.add((u, ("v", v), Q(1)))
            elif S[v].t == 0:
                out.add((u, ("v", v), Q(1, 3)))
    return out


def ledger_triples(ledger):
    return {(t.src[1], t.dst, t.amount) for t in ledger}


def free_three_tree():
    # a 3-vertex whose three neighbours each have degree 4
    rot = {1: [2, 3, 4]}
    nxt = 5
    for hub in (2, 3, 4):
        rot[hub] = [1]
        for _ in range(3):
            rot[hub].append(nxt)
            rot[nxt] = [hub]
            nxt += 1
    return PlaneGraph(rot)


def test_initial_charges():
    G = graph("bad5")
    ch = initial_charge(G)
    assert ch[("v", 1)] == 5
    by_deg = {G.degree(v): ch[("v", v)] for v in G.vertices}
    assert by_deg[3] == -1 and by_deg[4] == 2 and by_deg[1] == -7
    for f in G.faces:
        assert ch[("f", f.id)] == 2 * f.degree - 10
    wheel6 = PlaneGraph(gen.wheel(6))
    assert initial_charge(wheel6)[("v", 1)] == 8
    assert {initial_charge(wheel6)[("f", f.id)] for f in wheel6.faces if f.degree == 3} == {-4}


def test_c5_charges():
    ch = initial_charge(graph("c5"))
    assert ch.total() == -20
    assert sorted(ch.charge.values()) == [-4] * 5 + [0, 0]


@pytest.mark.parametrize("name", sorted(corpus_graphs()))
def test_euler_identity(name):
    assert initial_charge(graph(name)).total() == -20


def test_face_with_3_4_5_ends_at_zero():
    G = graph("bad5")
    final, ledger = apply_rules(G)
    tri = [f for f in G.faces if f.degree == 3 and face_pattern(G, f.id, [5, 3, 4])]
    assert tri
    for f in tri:
        assert final[("f", f.id)] == 0
        assert {t.rule for t in ledger if t.dst == ("f", f.id)} == {"R1.1"}


def test_weak_vertex_sends_nothing_to_faces():
    G = graph("soft4")
    assert classify(G)[1].weak4 is not None
    _, ledger = apply_rules(G)
    assert not [t for t in ledger if t.src == ("v", 1) and t.dst[0] == "f"]
    assert [t for t in ledger if t.src == ("v", 1) and t.rule.startswith("R4")]


def test_free_three_vertex_receives_one():
    G = free_three_tree()
    final, ledger = apply_rules(G)
    assert final[("v", 1)] == 0
    assert sorted(t.rule for t in ledger if t.dst == ("v", 1)) == ["R4.free"] * 3


def test_refuses_non_members():
    with pytest.raises(NotInClass):
        apply_rules(graph("k4"))
    assert audit(graph("k4")).verdict == "NOT_IN_CLASS"


def test_audit_examples():
    rep = audit(graph("c5"))
    assert rep.conserved and len(rep.negatives) == 5 and rep.configurations > 0
    assert rep.verdict == "CONSISTENT"
    rep = audit(graph("dodecahedron"))
    assert rep.total == -20 and rep.ok
    text = rep.to_text()
    assert text.rstrip().endswith("verdict CONSISTENT")
    assert "total -20/1" in text


def test_ledger_line_format():
    _, ledger = apply_rules(graph("bad5"))
    line = ledger.records[0].to_text()
    rule, src, arrow, dst, colon, amount = line.split()
    assert rule in RULE_IDS and arrow == "->" and colon == ":" and "/" in amount


def check_engine(G):
    final, ledger = apply_rules(G)
    assert final.total() == -20
    assert all(t.amount > 0 for t in ledger)
    keys = [(t.src, t.dst, t.rule) for t in ledger]
    assert len(keys) == len(set(keys))
    assert replay(G, ledger) == []
    assert ledger_triples(ledger) == reference_transfers(G)
    assert apply_rules(G)[0].charge == final.charge
    rep = audit(G)
    assert rep.ok, rep.to_text()


@pytest.mark.parametrize("name", sorted(class_members()))
def test_engine_on_corpus(name):
    check_engine(graph(name))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000))
def test_engine_on_random_members(seed):
    check_engine(random_member(seed, 6, 30))


def test_prefix_conservation():
    G = graph("thinned_2")
    state = initial_charge(G)
    _, ledger = apply_rules(G)
    for t in ledger:
        state.charge[t.src] -= t.amount
        state.charge[t.dst] += t.amount
        assert state.total() == -20


def test_corpus_exercises_every_rule():
    fired = set()
    for G in class_members().values():
        fired |= {t.rule for t in apply_rules(G)[1]}
    assert fired == set(RULE_IDS)
