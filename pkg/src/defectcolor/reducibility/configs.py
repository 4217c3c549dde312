"""Detection of the sixteen reducible configuration kinds.

Every kind has one predicate, ``_check_<kind>(G, roles)``, which either
rejects a role assignment or returns its deletion target and the set of
outside vertices the extension may recolor.  Detection enumerates
candidate role assignments and keeps those the predicate accepts, so
:func:`verify_witness` and :func:`find_all` can never disagree.

Beyond the literal hypotheses, predicates insist on the local shape the
extension arguments rely on (distinct vertices, no extra edges inside the
deleted set, recolorable neighbours kept away from it).  On graphs without
4-cycles adjacent to 3- or 4-cycles these side conditions always hold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterator

from ..plane_graph import PlaneGraph
from ..structure import is_cycle_face

KINDS = (
    "A1_smallDegree",
    "A2_adjacent3s",
    "A3_face344",
    "Q_lemma2",
    "B1_fourVertexThree3s",
    "B2_face444",
    "B3_lightLightFace",
    "B4_fiveVertex",
    "B5_sixVertex",
    "F1_34m4face",
    "F2_softOpposite",
    "SOFT_adjacentSoft",
    "C1",
    "C2",
    "C3",
    "KEY_twoBad5s",
)


@dataclass
class Configuration:
    kind: str
    roles: dict[str, int]
    delete: frozenset[int] = frozenset()
    edge: tuple[int, int] | None = None
    scratch: frozenset[int] = frozenset()
    # vertices the extension may change: the deleted set, or the triangle for edge kinds
    recolorable: frozenset[int] = field(default=frozenset())

    def __getitem__(self, role: str) -> int:
        return self.roles[role]

    @property
    def witness(self) -> tuple[int, ...]:
        return tuple(self.roles.values())

    def sort_key(self):
        return (KINDS.index(self.kind), self.witness)

    def to_text(self) -> str:
        roles = " ".join(f"{k}={v}" for k, v in self.roles.items())
        target = f"delete-edge {self.edge[0]}-{self.edge[1]}" if self.edge else \
            "delete " + ",".join(map(str, sorted(self.delete)))
        extra = f" scratch {','.join(map(str, sorted(self.scratch)))}" if self.scratch else ""
        return f"{self.kind} {roles} | {target}{extra}"


Target = tuple[frozenset, tuple | None, frozenset, frozenset]


# -- local helpers --------------------------------------------------------------

def _deg(G: PlaneGraph, v: int) -> int:
    return len(G.rotation[v])


def _triangles_at(G: PlaneGraph, v: int) -> list[tuple[int, int]]:
    """Neighbour pairs spanning a triangular face at ``v``, in corner order."""
    nb = G.rotation[v]
    d = len(nb)
    out = []
    for i in range(d):
        a, b = nb[i], nb[(i + 1) % d]
        if a == b:
            continue
        f = G.face_of_dart(v, a)
        if G.face_degree(f) == 3 and set(G.face(f).vertices) == {v, a, b}:
            out.append((a, b))
    return out


def _is_tri_face(G: PlaneGraph, a: int, b: int, c: int) -> bool:
    if not (G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(a, c)):
        return False
    for f in G.faces_at_edge(a, b):
        if G.face_degree(f) == 3 and set(G.face(f).vertices) == {a, b, c}:
            return True
    return False


def _off(G: PlaneGraph, v: int, exclude) -> list[int]:
    ex = set(exclude)
    return [u for u in G.rotation[v] if u not in ex]


def light_wrt(G: PlaneGraph, a: int, tri: tuple[int, int, int]) -> bool:
    """``a`` is a 4-vertex on the 3-face ``tri`` with both other neighbours of degree 3."""
    if _deg(G, a) != 4:
        return False
    rest = _off(G, a, tri)
    return len(rest) == 2 and all(_deg(G, u) == 3 for u in rest)


def soft_wrt(G: PlaneGraph, a: int, quad: tuple[int, ...]) -> bool:
    if _deg(G, a) != 4:
        return False
    rest = _off(G, a, quad)
    return len(rest) == 2 and all(_deg(G, u) == 3 for u in rest)


def s_wrt(G: PlaneGraph, a: int, tri) -> bool:
    return _deg(G, a) == 3 or light_wrt(G, a, tri)


def _out(G: PlaneGraph, v: int, S) -> int:
    return sum(1 for u in G.rotation[v] if u not in S)


def _edges_within(G: PlaneGraph, W) -> set[frozenset]:
    W = list(W)
    return {frozenset((a, b)) for a, b in combinations(W, 2) if G.has_edge(a, b)}


def _pairs(*pairs) -> set[frozenset]:
    return {frozenset(p) for p in pairs}


def _scratch_ok(G: PlaneGraph, s: int, center: int, p: int, S: set, far=()) -> frozenset | None:
    """Recolorable neighbours of the S-vertex ``s`` in the star argument.

    A 3-vertex needs at most one neighbour outside ``S``; a light 4-vertex
    needs its two other neighbours to be 3-vertices touching ``S`` only at
    ``s`` and not adjacent to ``center`` or to anything in ``far``.
    """
    d = _deg(G, s)
    if d == 3:
        return frozenset() if _out(G, s, S) <= 1 else None
    if d != 4:
        return None
    xy = _off(G, s, (center, p))
    if len(xy) != 2 or any(z in S for z in xy):
        return None
    for z in xy:
        if _deg(G, z) != 3:
            return None
        if set(G.rotation[z]) & S != {s}:
            return None
        if G.has_edge(z, center) or any(G.has_edge(z, f) or z == f for f in far):
            return None
    return frozenset(xy)


def _star_ok(G: PlaneGraph, center: int, W, internal, center_out: int, far=()) -> bool:
    S = {center, *W}
    if len(S) != len(W) + 1:
        return False
    if any(not G.has_edge(center, w) for w in W):
        return False
    if _edges_within(G, W) != internal:
        return False
    if _out(G, center, S) > center_out:
        return False
    return all(_out(G, w, S) <= 2 for w in W)


# -- predicates -----------------------------------------------------------------

def _check_A1(G, r) -> Target | None:
    v = r["v"]
    if _deg(G, v) > 2:
        return None
    return frozenset({v}), None, frozenset(), frozenset({v})


def _check_A2(G, r):
    u, v = r["u"], r["v"]
    if u == v or not G.has_edge(u, v) or _deg(G, u) != 3 or _deg(G, v) != 3:
        return None
    S = frozenset({u, v})
    return S, None, frozenset(), S


def _check_A3(G, r):
    a, b, c = r["a"], r["b"], r["c"]
    if not _is_tri_face(G, a, b, c):
        return None
    if (_deg(G, a), _deg(G, b), _deg(G, c)) != (3, 4, 4):
        return None
    S = frozenset({a, b, c})
    return S, None, frozenset(), S


def _check_Q(G, r):
    v, v1, v2, v3, v4 = (r[k] for k in ("v", "v1", "v2", "v3", "v4"))
    if _deg(G, v) != 5 or not _is_tri_face(G, v, v1, v2):
        return None
    W = (v1, v2, v3, v4)
    # the star argument also covers v3 v4 joined by a 3-face, as used for C3
    internal = _pairs((v1, v2))
    if G.has_edge(v3, v4):
        if not _is_tri_face(G, v, v3, v4):
            return None
        internal = _pairs((v1, v2), (v3, v4))
    if not _star_ok(G, v, W, internal, center_out=1):
        return None
    S = {v, *W}
    scratch = _scratch_ok(G, v1, v, v2, S)
    if scratch is None or (_deg(G, v1) == 4 and not light_wrt(G, v1, (v, v1, v2))):
        return None
    return frozenset(S), None, scratch, frozenset(S)


def _check_B1(G, r):
    v, a, b, c = r["v"], r["v1"], r["v2"], r["v3"]
    if _deg(G, v) != 4 or len({a, b, c}) != 3:
        return None
    if any(not G.has_edge(v, x) or _deg(G, x) != 3 for x in (a, b, c)):
        return None
    if _edges_within(G, (a, b, c)):
        return None
    S = frozenset({v, a, b, c})
    return S, None, frozenset(), S


def _check_B2(G, r):
    a, b, c = r["v1"], r["v2"], r["v3"]
    if not _is_tri_face(G, a, b, c):
        return None
    if any(_deg(G, x) > 4 for x in (a, b, c)):
        return None
    tri = frozenset({a, b, c})
    return frozenset(), (a, b), frozenset(), tri


def _check_B3(G, r):
    a, b, c = r["v1"], r["v2"], r["v3"]
    if not _is_tri_face(G, a, b, c) or _deg(G, a) < 5:
        return None
    tri = (a, b, c)
    if not (light_wrt(G, b, tri) and light_wrt(G, c, tri)):
        return None
    outs = _off(G, b, tri) + _off(G, c, tri)
    if len(set(outs)) != 4 or a in outs:
        return None
    return frozenset(), (b, c), frozenset(outs), frozenset({b, c})


def _check_B4(G, r):
    v, v1, v2, v3, v4 = (r[k] for k in ("v", "v1", "v2", "v3", "v4"))
    if _deg(G, v) != 5 or not _is_tri_face(G, v, v1, v2):
        return None
    if not (s_wrt(G, v1, (v, v1, v2)) and _deg(G, v2) == 4):
        return None
    if _deg(G, v3) != 3 or _deg(G, v4) != 3:
        return None
    return _check_Q(G, r)


def _check_B5(G, r):
    v = r["v"]
    vs = [r[f"v{i}"] for i in range(1, 7)]
    if _deg(G, v) != 6 or len(set(vs)) != 6:
        return None
    v1, v2, v3, v4, v5, v6 = vs
    for a, b in ((v1, v2), (v3, v4), (v5, v6)):
        if not _is_tri_face(G, v, a, b):
            return None
    if any(_deg(G, x) > 4 for x in (v1, v2, v3, v4)):
        return None
    if _deg(G, v6) != 4 or not s_wrt(G, v5, (v, v5, v6)):
        return None
    if not _star_ok(G, v, vs, _pairs((v1, v2), (v3, v4), (v5, v6)), center_out=0):
        return None
    S = {v, *vs}
    scratch = _scratch_ok(G, v5, v, v6, S)
    if scratch is None:
        return None
    return frozenset(S), None, scratch, frozenset(S)


def _check_F1(G, r):
    u, v, x, y = r["u"], r["v"], r["x"], r["y"]
    quad = (u, v, x, y)
    if not _is_quad_face(G, quad):
        return None
    if (_deg(G, u), _deg(G, v), _deg(G, x), _deg(G, y)) != (3, 4, 3, 4):
        return None
    if _edges_within(G, quad) != _pairs((u, v), (v, x), (x, y), (y, u)):
        return None
    S = frozenset(quad)
    return S, None, frozenset(), S


def _is_quad_face(G: PlaneGraph, quad) -> bool:
    if len(set(quad)) != 4:
        return False
    for i in range(4):
        if not G.has_edge(quad[i], quad[(i + 1) % 4]):
            return False
    a, b = quad[0], quad[1]
    for f in G.faces_at_edge(a, b):
        face = G.face(f)
        if face.degree == 4 and is_cycle_face(G, f) and set(face.vertices) == set(quad):
            return True
    return False


def _check_F2(G, r):
    u, v, x, y = r["u"], r["v"], r["x"], r["y"]
    quad = (u, v, x, y)
    if not _is_quad_face(G, quad):
        return None
    if _deg(G, u) != 3 or _deg(G, v) != 4 or _deg(G, y) != 4 or not soft_wrt(G, x, quad):
        return None
    x1, x2 = _off(G, x, quad)
    S = (u, v, x, y, x1, x2)
    if len(set(S)) != 6:
        return None
    want = _pairs((u, v), (v, x), (x, y), (y, u), (x, x1), (x, x2))
    if _edges_within(G, S) != want:
        return None
    if any(_out(G, w, S) > 2 for w in (v, y, x1, x2)) or _out(G, u, S) > 1:
        return None
    return frozenset(S), None, frozenset(), frozenset(S)


def _check_SOFT(G, r):
    u, x, y, v = r["u"], r["x"], r["y"], r["v"]
    quad = (u, x, y, v)
    if not _is_quad_face(G, quad):
        return None
    if not (soft_wrt(G, u, quad) and soft_wrt(G, v, quad)):
        return None
    us = _off(G, u, quad)
    vs = _off(G, v, quad)
    S = (u, v, *us, *vs)
    if len(set(S)) != 6:
        return None
    want = _pairs((u, v), (u, us[0]), (u, us[1]), (v, vs[0]), (v, vs[1]))
    if _edges_within(G, S) != want:
        return None
    return frozenset(S), None, frozenset(), frozenset(S)


def _two_triangles(G, r, pair_test) -> bool:
    v, v1, v2, v3, v4, v5 = (r[k] for k in ("v", "v1", "v2", "v3", "v4", "v5"))
    if _deg(G, v) != 5 or len({v1, v2, v3, v4, v5}) != 5:
        return False
    if set(G.rotation[v]) != {v1, v2, v3, v4, v5}:
        return False
    if not (_is_tri_face(G, v, v1, v2) and _is_tri_face(G, v, v3, v4)):
        return False
    return pair_test(v, v1, v2, v3, v4, v5)


def _check_C1(G, r):
    def ok(v, v1, v2, v3, v4, v5):
        return all(_deg(G, a) <= 4 for a in (v1, v2, v3, v4)) and _deg(G, v5) == 3
    if not _two_triangles(G, r, ok):
        return None
    W = tuple(r[f"v{i}"] for i in range(1, 6))
    if not _star_ok(G, r["v"], W, _pairs((W[0], W[1]), (W[2], W[3])), center_out=0):
        return None
    S = frozenset({r["v"], *W})
    return S, None, frozenset(), S


def _check_C2(G, r):
    def ok(v, v1, v2, v3, v4, v5):
        return (s_wrt(G, v1, (v, v1, v2)) and _deg(G, v2) == 4
                and s_wrt(G, v3, (v, v3, v4)) and _deg(G, v4) >= 4 and _deg(G, v5) == 3)
    if not _two_triangles(G, r, ok):
        return None
    v, v1, v2, v3, v4, v5 = (r[k] for k in ("v", "v1", "v2", "v3", "v4", "v5"))
    W = (v1, v2, v3, v5)
    S = {v, *W}
    if _edges_within(G, W) != _pairs((v1, v2)):
        return None
    if _out(G, v, S) != 1 or any(_out(G, w, S) > 2 for w in (v2, v5)):
        return None
    scratch = _scratch_ok(G, v1, v, v2, S)
    if scratch is None:
        return None
    if _deg(G, v3) == 3:
        if _out(G, v3, S) > 2:
            return None
    else:
        more = _scratch_ok(G, v3, v, v4, S, far=scratch)
        if more is None:
            return None
        scratch |= more
    return frozenset(S), None, scratch, frozenset(S)


def _check_C3(G, r):
    def ok(v, v1, v2, v3, v4, v5):
        return (s_wrt(G, v1, (v, v1, v2)) and _deg(G, v2) == 4
                and s_wrt(G, v3, (v, v3, v4)) and _deg(G, v4) == 4)
    if not _two_triangles(G, r, ok):
        return None
    v, v1, v2, v3, v4 = (r[k] for k in ("v", "v1", "v2", "v3", "v4"))
    W = (v1, v2, v3, v4)
    if not _star_ok(G, v, W, _pairs((v1, v2), (v3, v4)), center_out=1):
        return None
    S = {v, *W}
    scratch = _scratch_ok(G, v1, v, v2, S)
    if scratch is None:
        return None
    return frozenset(S), None, scratch, frozenset(S)


def bad5_roles(G: PlaneGraph, v: int, avoid: tuple[int, int]) -> list[tuple[int, int, int]]:
    """``(s, p, t)`` for a bad 5-vertex ``v`` whose second 3-face is ``v`` + ``avoid``.

    ``[v s p]`` is the (5,*,4)-face and ``t`` the remaining 3-neighbour.
    """
    if _deg(G, v) != 5:
        return []
    out = []
    for a, b in _triangles_at(G, v):
        if {a, b} & set(avoid):
            continue
        rest = set(G.rotation[v]) - {a, b, *avoid}
        if len(rest) != 1:
            continue
        (t,) = rest
        if _deg(G, t) != 3:
            continue
        for s, p in ((a, b), (b, a)):
            if s_wrt(G, s, (v, s, p)) and _deg(G, p) == 4:
                out.append((s, p, t))
    return out


def _check_KEY(G, r):
    u, v, w = r["u"], r["v"], r["w"]
    if not _is_tri_face(G, u, v, w):
        return None
    vs = (r["v1"], r["v2"], r["v3"])
    ws = (r["w1"], r["w2"], r["w3"])
    if vs not in bad5_roles(G, v, (u, w)) or ws not in bad5_roles(G, w, (u, v)):
        return None
    S = {v, w, *vs, *ws}
    if len(S) != 8 or u in S:
        return None
    want = _pairs((v, w), (v, vs[0]), (v, vs[1]), (v, vs[2]), (vs[0], vs[1]),
                  (w, ws[0]), (w, ws[1]), (w, ws[2]), (ws[0], ws[1]))
    if _edges_within(G, S) != want:
        return None
    if _out(G, v, S) != 1 or _out(G, w, S) != 1:
        return None
    if any(_out(G, x, S) > 2 for x in (vs[1], vs[2], ws[1], ws[2])):
        return None
    sv = _scratch_ok(G, vs[0], v, vs[1], S, far=(u,))
    sw = _scratch_ok(G, ws[0], w, ws[1], S, far=(u,))
    if sv is None or sw is None or sv & sw:
        return None
    return frozenset(S), None, sv | sw, frozenset(S)


# -- candidate enumeration -------------------------------------------------------

def _cands_A1(G, rep):
    for v in G.vertices:
        if _deg(G, v) <= 2:
            yield {"v": v}


def _cands_A2(G, rep):
    for u, v in G.edges:
        yield {"u": u, "v": v}


def _tri_faces(G):
    for f in G.faces:
        if f.degree == 3 and is_cycle_face(G, f.id):
            yield f.vertices


def _quad_faces(G):
    for f in G.faces:
        if f.degree == 4 and is_cycle_face(G, f.id):
            yield f.vertices


def _cands_A3(G, rep):
    for tri in _tri_faces(G):
        for a, b, c in permutations(tri):
            if b < c:
                yield {"a": a, "b": b, "c": c}


def _cands_star5(G, rep):
    for v in G.vertices:
        if _deg(G, v) != 5:
            continue
        for a, b in _triangles_at(G, v):
            rest = [x for x in G.rotation[v] if x not in (a, b)]
            for s, p in ((a, b), (b, a)):
                for v3, v4 in combinations(sorted(rest), 2):
                    yield {"v": v, "v1": s, "v2": p, "v3": v3, "v4": v4}


def _cands_B1(G, rep):
    for v in G.vertices:
        if _deg(G, v) == 4:
            threes = sorted(u for u in G.rotation[v] if _deg(G, u) == 3)
            for a, b, c in combinations(threes, 3):
                yield {"v": v, "v1": a, "v2": b, "v3": c}


def _cands_B2(G, rep):
    for tri in _tri_faces(G):
        a, b, c = sorted(tri)
        yield {"v1": a, "v2": b, "v3": c}


def _cands_B3(G, rep):
    for tri in _tri_faces(G):
        for a in tri:
            b, c = sorted(x for x in tri if x != a)
            yield {"v1": a, "v2": b, "v3": c}


def _cands_B5(G, rep):
    for v in G.vertices:
        if _deg(G, v) != 6:
            continue
        tris = _triangles_at(G, v)
        if len(tris) < 3:
            continue
        for t1, t3, t5 in permutations(tris, 3):
            if t1 > t3:
                continue
            for s, p in (t5, t5[::-1]):
                yield {"v": v, "v1": t1[0], "v2": t1[1], "v3": t3[0], "v4": t3[1], "v5": s, "v6": p}


def _cands_quad(names):
    def gen(G, rep):
        for quad in _quad_faces(G):
            seq = list(quad)
            for order in (seq, seq[::-1]):
                for k in range(4):
                    rot = order[k:] + order[:k]
                    yield dict(zip(names, rot))
    return gen


def _cands_two_tri(G, rep):
    for v in G.vertices:
        if _deg(G, v) != 5:
            continue
        tris = _triangles_at(G, v)
        for t1, t3 in permutations(tris, 2):
            if set(t1) & set(t3):
                continue
            rest = set(G.rotation[v]) - set(t1) - set(t3)
            if len(rest) != 1:
                continue
            (v5,) = rest
            for a, b in (t1, t1[::-1]):
                for c, d in (t3, t3[::-1]):
                    yield {"v": v, "v1": a, "v2": b, "v3": c, "v4": d, "v5": v5}


def _cands_KEY(G, rep):
    for tri in _tri_faces(G):
        for u, v, w in permutations(tri):
            if v > w:
                continue
            for vs in bad5_roles(G, v, (u, w)):
                for ws in bad5_roles(G, w, (u, v)):
                    yield {"u": u, "v": v, "w": w, "v1": vs[0], "v2": vs[1], "v3": vs[2],
                           "w1": ws[0], "w2": ws[1], "w3": ws[2]}


REGISTRY: dict[str, tuple[Callable, Callable]] = {
    "A1_smallDegree": (_cands_A1, _check_A1),
    "A2_adjacent3s": (_cands_A2, _check_A2),
    "A3_face344": (_cands_A3, _check_A3),
    "Q_lemma2": (_cands_star5, _check_Q),
    "B1_fourVertexThree3s": (_cands_B1, _check_B1),
    "B2_face444": (_cands_B2, _check_B2),
    "B3_lightLightFace": (_cands_B3, _check_B3),
    "B4_fiveVertex": (_cands_star5, _check_B4),
    "B5_sixVertex": (_cands_B5, _check_B5),
    "F1_34m4face": (_cands_quad(("u", "v", "x", "y")), _check_F1),
    "F2_softOpposite": (_cands_quad(("u", "v", "x", "y")), _check_F2),
    "SOFT_adjacentSoft": (_cands_quad(("u", "x", "y", "v")), _check_SOFT),
    "C1": (_cands_two_tri, _check_C1),
    "C2": (_cands_two_tri, _check_C2),
    "C3": (_cands_two_tri, _check_C3),
    "KEY_twoBad5s": (_cands_KEY, _check_KEY),
}


def _collect(G: PlaneGraph, kind: str) -> list[Configuration]:
    cands, check = REGISTRY[kind]
    best: dict = {}
    for roles in cands(G, None):
        res = check(G, roles)
        if res is None:
            continue
        S, edge, scratch, recolorable = res
        cfg = Configuration(kind, dict(roles), S, edge, scratch, recolorable)
        key = (S, edge)
        if key not in best or cfg.witness < best[key].witness:
            best[key] = cfg
    return sorted(best.values(), key=Configuration.sort_key)


def find_all(G: PlaneGraph, kinds=KINDS) -> list[Configuration]:
    out: list[Configuration] = []
    for kind in kinds:
        out.extend(_collect(G, kind))
    return out


def find_first(G: PlaneGraph, kinds=KINDS) -> Configuration | None:
    for kind in kinds:
        found = _collect(G, kind)
        if found:
            return found[0]
    return None


def verify_witness(G: PlaneGraph, cfg: Configuration) -> bool:
    try:
        res = REGISTRY[cfg.kind][1](G, cfg.roles)
    except KeyError:
        return False
    if res is None:
        return False
    S, edge, scratch, recolorable = res
    return (S, edge, scratch) == (cfg.delete, cfg.edge, cfg.scratch)


def iter_kinds(G: PlaneGraph) -> Iterator[tuple[str, list[Configuration]]]:
    for kind in KINDS:
        yield kind, _collect(G, kind)
