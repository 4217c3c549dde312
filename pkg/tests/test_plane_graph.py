from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from defectcolor import generators as gen
from defectcolor.errors import (
    AsymmetricRotation,
    Disconnected,
    EulerViolation,
    LoopOrMultiEdge,
    ParseError,
    UnknownFace,
    UnknownVertex,
)
from defectcolor.plane_graph import PlaneGraph, format_rotation, loads, parse_rotation

from conftest import corpus_graphs, graph, random_member


def nx_face_degrees(G: PlaneGraph) -> Counter:
    """Face sizes from networkx's own face traversal of the same embedding."""
    emb = nx.PlanarEmbedding()
    for v, nbrs in G.rotation.items():
        emb.add_node(v)
        prev = None
        for u in nbrs:
            emb.add_half_edge(v, u, cw=prev) if prev is not None else emb.add_half_edge(v, u)
            prev = u
    seen = set()
    sizes = Counter()
    for v, u in emb.edges():
        if (v, u) not in seen:
            sizes[len(emb.traverse_face(v, u, mark_half_edges=seen))] += 1
    return sizes


def test_k4_faces():
    G = graph("k4")
    assert sorted(f.degree for f in G.faces) == [3, 3, 3, 3]
    for v in G.vertices:
        assert G.degree(v) == 3
        assert [G.face_degree(f) for f in G.incident_faces(v)] == [3, 3, 3]


def test_c5_faces():
    G = graph("c5")
    assert sorted(f.degree for f in G.faces) == [5, 5]
    assert all(len(set(G.incident_faces(v))) == 2 for v in G.vertices)


def test_cube_faces():
    G = graph("cube")
    assert len(G.faces) == 6
    assert all(f.degree == 4 for f in G.faces)


def test_star_has_one_face():
    G = PlaneGraph(gen.star(3))
    assert [f.degree for f in G.faces] == [6]


def test_tree_walk_repeats_vertices():
    G = graph("p3")
    (f,) = G.faces
    assert f.degree == 4
    assert len(set(f.vertices)) == 3


def test_single_vertex():
    G = loads("1:\n")
    assert len(G.faces) == 1 and G.face_degree(0) == 0


@pytest.mark.parametrize("text,exc", [
    ("1: 2\n2:\n", AsymmetricRotation),
    ("1: 1\n", LoopOrMultiEdge),
    ("1: 2 2\n2: 1 1\n", LoopOrMultiEdge),
    ("1: 2\n2: 1\n3: 4\n4: 3\n", Disconnected),
    ("1: 3\n2: 3\n3: 1 2\n1: 2\n", ParseError),
])
def test_rejects_bad_rotation(text, exc):
    with pytest.raises(exc):
        loads(text)


def test_nonplanar_rotation():
    # K4 with one rotation reversed is a torus-like embedding
    rot = {v: list(n) for v, n in graph("k4").rotation.items()}
    rot[1].reverse()
    with pytest.raises(EulerViolation):
        PlaneGraph(rot)


def test_parse_error_position():
    with pytest.raises(ParseError) as ei:
        parse_rotation("1: 2\n2: 1 x\n", source="g.rot")
    assert ei.value.line == 2 and ei.value.column == 6
    assert "g.rot:2:6:" in str(ei.value)


def test_comments_and_blank_lines():
    G = loads("# a triangle\n\n1: 2 3  # first\n2: 3 1\n3: 1 2\n")
    assert len(G) == 3 and len(G.faces) == 2


def test_unknown_handles():
    G = graph("c3")
    with pytest.raises(UnknownVertex):
        G.degree(9)
    with pytest.raises(UnknownFace):
        G.face(9)


def test_incident_faces_follow_rotation():
    G = graph("dodecahedron")
    for v in G.vertices:
        nb = G.neighbors(v)
        for i, f in enumerate(G.incident_faces(v)):
            verts = G.face(f).vertices
            assert nb[i] in verts and nb[(i + 1) % len(nb)] in verts


def check_invariants(G: PlaneGraph):
    deg_sum = sum(G.degree(v) for v in G.vertices)
    assert deg_sum == sum(f.degree for f in G.faces) == 2 * len(G.edges)
    darts = [d for f in G.faces for d in f.darts]
    assert len(darts) == len(set(darts)) == deg_sum
    again = PlaneGraph(G.rotation)
    assert [f.darts for f in again.faces] == [f.darts for f in G.faces]
    assert loads(format_rotation(G.rotation)) == G
    assert Counter(f.degree for f in G.faces) == nx_face_degrees(G)


@pytest.mark.parametrize("name", sorted(corpus_graphs()))
def test_corpus_invariants(name):
    check_invariants(graph(name))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_random_member_invariants(seed):
    check_invariants(random_member(seed, 4, 25))


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 12))
def test_family_invariants(n):
    for rot in (gen.cycle(n), gen.wheel(n), gen.prism(n), gen.path(n)):
        check_invariants(PlaneGraph(rot))


def test_delete_vertices_components():
    G = graph("p3")
    middle = next(v for v in G.vertices if G.degree(v) == 2)
    parts = G.delete_vertices([middle])
    assert sorted(len(p) for p in parts) == [1, 1]
