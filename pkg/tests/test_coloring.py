import random
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from defectcolor import generators as gen
from defectcolor.coloring import (
    canonical_list_systems,
    check,
    count_list_systems,
    format_coloring,
    format_lists,
    induced_assignment,
    is_choosable,
    parse_lists,
    random_lists,
    solve,
    uniform_lists,
)
from defectcolor.errors import ParseError, PartialColoring, TooLarge
from defectcolor.kernels import BACKEND, solve_csr, solve_csr_py
from defectcolor.plane_graph import PlaneGraph

from conftest import graph


def enumerate_colorings(G, L, d):
    """Does any assignment from the lists pass the defect test?  Pure brute force."""
    verts = list(G.vertices)
    for combo in product(*(sorted(L[v]) for v in verts)):
        pi = dict(zip(verts, combo))
        if all(sum(pi[u] == pi[v] for u in G.neighbors(v)) <= d for v in verts):
            return True
    return False


def small_graphs():
    out = [graph(n) for n in ("k2", "p3", "c3", "k4", "c5")]
    out += [PlaneGraph(gen.star(3)), PlaneGraph(gen.wheel(4)), PlaneGraph(gen.cycle(4))]
    return out


def test_check_reports_violations():
    G = graph("c3")
    L = uniform_lists(G, 2)
    assert check(G, L, {1: 1, 2: 1, 3: 2}, 1)
    res = check(G, L, {1: 1, 2: 1, 3: 1}, 1)
    assert not res and {v.kind for v in res.violations} == {"defect"}
    res = check(G, L, {1: 5, 2: 1, 3: 2}, 1)
    assert [v.kind for v in res.violations] == ["list"]
    assert "not in its list" in str(res.violations[0])
    assert check(G, None, {1: 5, 2: 5, 3: 6}, 1)


def test_check_needs_total_coloring():
    with pytest.raises(PartialColoring):
        check(graph("c3"), None, {1: 1}, 0)


def test_solve_examples():
    K4 = graph("k4")
    pi = solve(K4, uniform_lists(K4, 2), 1)
    assert pi is not None and check(K4, uniform_lists(K4, 2), pi, 1)
    assert solve(K4, uniform_lists(K4, 1), 2) is None
    assert solve(K4, uniform_lists(K4, 1), 3) is not None
    C5 = graph("c5")
    assert solve(C5, uniform_lists(C5, 2), 0) is None
    assert solve(C5, uniform_lists(C5, 3), 0) is not None


def test_solve_is_deterministic():
    G = graph("dodecahedron")
    L = random_lists(G, 3, 9, random.Random(4))
    assert solve(G, L, 1) == solve(G, L, 1)


def test_induced_assignment():
    G = graph("c5")
    L = uniform_lists(G, 3)
    got = induced_assignment(G, {1, 2}, {3: 1, 4: 2, 5: 3}, L)
    assert got == {1: frozenset({1, 2}), 2: frozenset({2, 3})}


def test_choosability_examples():
    assert is_choosable(graph("c5"), 3, 1).choosable
    res = is_choosable(graph("k2"), 1, 0)
    assert not res.choosable
    a, b = res.witness.values()
    assert a == b and len(a) == 1


def test_choosability_budget():
    with pytest.raises(TooLarge):
        is_choosable(graph("dodecahedron"), 3, 1, budget=1000)


@pytest.mark.parametrize("n,k,u", [(1, 2, 4), (2, 2, 4), (3, 2, 6), (3, 3, 9), (4, 1, 4)])
def test_canonical_systems_counted(n, k, u):
    systems = list(canonical_list_systems(n, k, u))
    assert len(systems) == count_list_systems(n, k, u) == len(set(systems))


def test_canonical_systems_cover_all_renamings():
    # every raw system is a color permutation of some canonical one
    n, k, u = 3, 2, 4
    canon = set(canonical_list_systems(n, k, u))
    subsets = [frozenset(c) for c in combinations(range(1, u + 1), k)]
    perms = [dict(zip(range(1, u + 1), p)) for p in permutations(range(1, u + 1))]
    for raw in product(subsets, repeat=n):
        assert any(tuple(frozenset(p[c] for c in lst) for lst in raw) in canon for p in perms)


def test_list_format_roundtrip():
    L = {1: frozenset({1, 2, 3}), 2: frozenset({4})}
    assert parse_lists(format_lists(L)) == L
    assert format_coloring({2: 5, 1: 3}) == "1: 3\n2: 5\n"


def test_list_parse_errors():
    with pytest.raises(ParseError) as ei:
        parse_lists("1: 1 2\n2 3\n")
    assert ei.value.line == 2
    with pytest.raises(ParseError):
        parse_lists("1: a\n")


@pytest.mark.parametrize("G", small_graphs(), ids=lambda G: repr(G))
@pytest.mark.parametrize("d", [0, 1, 2])
def test_solve_matches_enumeration_uniform(G, d):
    for k in (1, 2, 3):
        L = uniform_lists(G, k)
        pi = solve(G, L, d)
        assert (pi is not None) == enumerate_colorings(G, L, d)
        if pi is not None:
            assert check(G, L, pi, d)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_solve_matches_enumeration_random(data):
    G = data.draw(st.sampled_from(small_graphs()))
    d = data.draw(st.integers(0, 2))
    L = {v: frozenset(data.draw(st.sets(st.integers(1, 3), min_size=1, max_size=3))) for v in G.vertices}
    pi = solve(G, L, d)
    assert (pi is not None) == enumerate_colorings(G, L, d)
    if pi is not None:
        assert check(G, L, pi, d)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(0, 2))
def test_backends_agree(seed, d):
    rng = random.Random(seed)
    G = PlaneGraph(gen.random_class_member(rng.randint(4, 18), rng))
    L = random_lists(G, rng.randint(1, 3), 5, rng)
    verts = list(G.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    indptr, indices = [0], []
    for v in verts:
        indices.extend(idx[u] for u in G.neighbors(v))
        indptr.append(len(indices))
    lptr, lcol = [0], []
    for v in verts:
        lcol.extend(sorted(L[v]))
        lptr.append(len(lcol))
    order = list(range(len(verts)))
    assert solve_csr(indptr, indices, lptr, lcol, order, d) == solve_csr_py(indptr, indices, lptr, lcol, order, d)


def test_backend_name():
    assert BACKEND in ("cython", "python")
