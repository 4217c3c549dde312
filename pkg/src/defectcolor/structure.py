"""Structural predicates on plane graphs.

Covers the short-cycle inventory and class test (no 4-cycle sharing an
edge with a 3- or 4-cycle), girth, face degree patterns and the vertex
taxonomy that the reducible configurations and discharging rules are
phrased in: light, soft and weak 4-vertices, S-vertices, bad 5-vertices,
and pendant/free 3-neighbours.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import Acyclic, PatternLengthMismatch, UnsupportedLength
from .plane_graph import PlaneGraph

Cycle = tuple[int, ...]


# -- cycles ---------------------------------------------------------------

def cycles_of_length(G: PlaneGraph, k: int) -> list[Cycle]:
    """All ``k``-cycles for ``k`` in {3, 4}, facial or not.

    Each cycle is reported once as its lexicographically least
    rotation/reflection: the smallest vertex first, then the smaller of its
    two cycle neighbours.
    """
    if k not in (3, 4):
        raise UnsupportedLength(f"only 3- and 4-cycles are enumerated, got {k}")
    adj = G.adj
    out: list[Cycle] = []
    for a in G.vertices:
        nbrs = sorted(u for u in adj[a] if u > a)
        if k == 3:
            for i, b in enumerate(nbrs):
                for c in nbrs[i + 1:]:
                    if c in adj[b]:
                        out.append((a, b, c))
        else:
            for i, b in enumerate(nbrs):
                for d in nbrs[i + 1:]:
                    for c in adj[b] & adj[d]:
                        if c > a and c != b and c != d:
                            out.append((a, b, c, d))
    out.sort()
    return out


def cycle_edges(cycle: Cycle) -> list[tuple[int, int]]:
    n = len(cycle)
    return [tuple(sorted((cycle[i], cycle[(i + 1) % n]))) for i in range(n)]


@dataclass
class ClassReport:
    in_class: bool
    violations: list[tuple[Cycle, Cycle, tuple[int, int]]] = field(default_factory=list)

    def to_text(self) -> str:
        lines = [f"in class: {'yes' if self.in_class else 'no'}",
                 f"violations: {len(self.violations)}"]
        for c4, c, e in self.violations:
            lines.append(f"  {'-'.join(map(str, c4))} ~ {'-'.join(map(str, c))} via {e[0]}-{e[1]}")
        return "\n".join(lines) + "\n"


def in_class(G: PlaneGraph) -> ClassReport:
    """Report every pair (4-cycle, other 3- or 4-cycle) sharing an edge."""
    c3 = cycles_of_length(G, 3)
    c4 = cycles_of_length(G, 4)
    by_edge: dict[tuple[int, int], list[Cycle]] = {}
    for c in c3 + c4:
        for e in cycle_edges(c):
            by_edge.setdefault(e, []).append(c)
    violations = []
    for q in c4:
        seen = set()
        for e in cycle_edges(q):
            for c in by_edge[e]:
                if c != q and c not in seen:
                    seen.add(c)
                    violations.append((q, c, e))
    return ClassReport(not violations, violations)


def girth(G: PlaneGraph) -> int:
    best = None
    adj = G.adj
    for s in G.vertices:
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for u in adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    if best is None:
        raise Acyclic("graph has no cycle")
    return best


# -- vertex taxonomy --------------------------------------------------------

@dataclass
class VertexInfo:
    degree: int
    t: int = 0
    m4: int = 0
    n3: int = 0
    nu3: int = 0
    p3: int = 0
    light4: int | None = None   # witness: corner index of the 3-face
    soft4: int | None = None    # witness: corner index of the 4-face
    weak4: int | None = None    # witness: corner index of the 4-face
    s_vertex: bool = False
    bad5: tuple[int, int] | None = None  # corner of the (5,*,4)-face, corner of the other 3-face

    def flags(self) -> list[str]:
        out = []
        for name in ("light4", "soft4", "weak4", "bad5"):
            if getattr(self, name) is not None:
                out.append(name)
        if self.s_vertex:
            out.append("S")
        return out


@dataclass
class StructureReport:
    vertices: dict[int, VertexInfo]
    face_patterns: dict[int, tuple[int, ...]]
    free3: dict[int, list[int]]      # u -> free 3-neighbours of u
    pendant3: dict[int, list[int]]   # u -> pendant 3-neighbours of u

    def __getitem__(self, v: int) -> VertexInfo:
        return self.vertices[v]

    def is_s_vertex(self, v: int) -> bool:
        return self.vertices[v].s_vertex

    def to_text(self) -> str:
        lines = []
        for v, info in self.vertices.items():
            lines.append(
                f"v {v} d={info.degree} t={info.t} m4={info.m4} n3={info.n3} "
                f"nu3={info.nu3} p3={info.p3} flags={','.join(info.flags()) or '-'}"
            )
        for f, pat in self.face_patterns.items():
            lines.append(f"f {f} d={len(pat)} degrees={','.join(map(str, pat))}")
        return "\n".join(lines) + "\n"


def _corner_face(G: PlaneGraph, v: int, i: int) -> int:
    """Face in the corner between the ``i``-th and ``(i+1)``-th neighbours of ``v``."""
    nb = G.neighbors(v)
    return G.face_of_dart(v, nb[i % len(nb)])


def is_cycle_face(G: PlaneGraph, fid: int) -> bool:
    vs = G.face(fid).vertices
    return len(set(vs)) == len(vs)


def corner_faces(G: PlaneGraph, v: int, k: int) -> list[int]:
    """Corner indices at ``v`` whose face is a ``k``-cycle face (a face, not a walk)."""
    out = []
    for i in range(G.degree(v)):
        f = _corner_face(G, v, i)
        if G.face_degree(f) == k and is_cycle_face(G, f):
            out.append(i)
    return out


def light_witness(G: PlaneGraph, v: int, i: int) -> bool:
    """Is ``v`` light with respect to the 3-face in its corner ``i``?"""
    return _off_face_threes(G, v, i, 3)


def soft_witness(G: PlaneGraph, v: int, i: int) -> bool:
    return _off_face_threes(G, v, i, 4)


def _off_face_threes(G: PlaneGraph, v: int, i: int, k: int) -> bool:
    if G.degree(v) != 4:
        return False
    f = _corner_face(G, v, i)
    if G.face_degree(f) != k or not is_cycle_face(G, f):
        return False
    on_face = set(G.face(f).vertices)
    return sum(1 for u in G.neighbors(v) if u not in on_face and G.degree(u) == 3) >= 2


def edge_on_triangle(G: PlaneGraph, u: int, v: int) -> bool:
    a, b = G.faces_at_edge(u, v)
    return G.face_degree(a) == 3 or G.face_degree(b) == 3


@lru_cache(maxsize=256)
def classify(G: PlaneGraph) -> StructureReport:
    info = {v: VertexInfo(G.degree(v)) for v in G.vertices}
    deg = {v: G.degree(v) for v in G.vertices}

    for v in G.vertices:
        inc = set(G.incident_faces(v))
        info[v].t = sum(1 for f in inc if G.face_degree(f) == 3)
        info[v].m4 = sum(1 for f in inc if G.face_degree(f) == 4)
        info[v].n3 = sum(1 for u in G.neighbors(v) if deg[u] == 3)

    for v in G.vertices:
        if deg[v] != 4:
            continue
        for i in range(4):
            if info[v].light4 is None and light_witness(G, v, i):
                info[v].light4 = i
            if info[v].soft4 is None and soft_witness(G, v, i):
                info[v].soft4 = i
            if info[v].weak4 is None and soft_witness(G, v, i):
                opposite = _corner_face(G, v, i + 2)
                if G.face_degree(opposite) >= 5:
                    info[v].weak4 = i

    for v in G.vertices:
        info[v].s_vertex = deg[v] == 3 or info[v].light4 is not None

    for v in G.vertices:
        if deg[v] == 5:
            w = bad5_witness(G, v, info)
            if w is not None:
                info[v].bad5 = w

    free3: dict[int, list[int]] = {v: [] for v in G.vertices}
    pendant3: dict[int, list[int]] = {v: [] for v in G.vertices}
    for u in G.vertices:
        for v in G.neighbors(u):
            if deg[v] != 3 or edge_on_triangle(G, u, v):
                continue
            if info[v].t == 0:
                free3[u].append(v)
            elif info[v].t == 1:
                pendant3[u].append(v)
        info[u].nu3 = len(free3[u])
        info[u].p3 = len(pendant3[u])

    patterns = {f.id: tuple(deg[x] for x in f.vertices) for f in G.faces}
    return StructureReport(info, patterns, free3, pendant3)


def triangle_corners(G: PlaneGraph, v: int) -> list[int]:
    return corner_faces(G, v, 3)


def bad5_witness(G: PlaneGraph, v: int, info=None) -> tuple[int, int] | None:
    """First pair of corners ``(i, j)`` making ``v`` a bad 5-vertex.

    Corner ``i`` holds the (5,*,4)-face, corner ``j`` the second 3-face.
    """
    if G.degree(v) != 5:
        return None
    nb = G.neighbors(v)
    tri = triangle_corners(G, v)
    for i in tri:
        for j in tri:
            if i == j:
                continue
            used = {nb[i], nb[(i + 1) % 5], nb[j], nb[(j + 1) % 5]}
            if len(used) != 4:
                continue
            (rest,) = set(nb) - used
            if G.degree(rest) != 3:
                continue
            a, b = nb[i], nb[(i + 1) % 5]
            if _is_s(G, a, info) and G.degree(b) == 4 or _is_s(G, b, info) and G.degree(a) == 4:
                return (i, j)
    return None


def _is_s(G: PlaneGraph, v: int, info=None) -> bool:
    if info is not None:
        return info[v].s_vertex
    return is_s_vertex(G, v)


def is_s_vertex(G: PlaneGraph, v: int) -> bool:
    if G.degree(v) == 3:
        return True
    return G.degree(v) == 4 and any(light_witness(G, v, i) for i in range(4))


def is_light(G: PlaneGraph, v: int) -> bool:
    return G.degree(v) == 4 and any(light_witness(G, v, i) for i in range(4))


def is_soft(G: PlaneGraph, v: int) -> bool:
    return G.degree(v) == 4 and any(soft_witness(G, v, i) for i in range(4))


def is_bad5(G: PlaneGraph, v: int) -> bool:
    return bad5_witness(G, v) is not None


# -- face patterns ----------------------------------------------------------

_ENTRY = re.compile(r"^\s*(\d+)\s*([+\-−]?)\s*$")


def _entry_matches(G: PlaneGraph, v: int, entry) -> bool:
    if entry == "*":
        return is_s_vertex(G, v)
    if isinstance(entry, int):
        return G.degree(v) == entry
    m = _ENTRY.match(str(entry))
    if not m:
        raise ValueError(f"bad pattern entry {entry!r}")
    k, sign = int(m.group(1)), m.group(2)
    d = G.degree(v)
    if sign == "+":
        return d >= k
    if sign:
        return d <= k
    return d == k


def face_pattern(G: PlaneGraph, f: int, pattern: Sequence) -> bool:
    """Does some rotation or reflection of the boundary of ``f`` match ``pattern``?

    Entries are ints, strings ``"k"``, ``"k+"``, ``"k-"`` or ``"*"`` (an
    S-vertex).
    """
    verts = G.face(f).vertices
    if len(pattern) != len(verts):
        raise PatternLengthMismatch(f"face {f} has degree {len(verts)}, pattern has {len(pattern)}")
    return match_cyclic(G, verts, pattern) is not None


def match_cyclic(G: PlaneGraph, verts: Sequence[int], pattern: Sequence):
    """First rotation/reflection of ``verts`` matching ``pattern`` entrywise, else None."""
    n = len(verts)
    for seq in (list(verts), list(reversed(verts))):
        for r in range(n):
            cand = seq[r:] + seq[:r]
            if all(_entry_matches(G, x, p) for x, p in zip(cand, pattern)):
                return tuple(cand)
    return None
