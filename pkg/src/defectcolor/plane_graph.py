"""Connected simple plane graphs given by rotation systems.

A rotation system lists, for every vertex, its neighbours in clockwise
order.  Faces are recovered by face tracing with a fixed convention: from
the directed edge ``(u, v)`` the walk continues along ``(v, w)`` where ``w``
immediately precedes ``u`` in the clockwise rotation at ``v``.  Each face
is therefore traversed counterclockwise and every directed edge lies on
exactly one face walk.

Text format, one line per vertex::

    # comment
    1: 2 3 4
    2: 1 4 3
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import (
    AsymmetricRotation,
    Disconnected,
    EulerViolation,
    LoopOrMultiEdge,
    ParseError,
    UnknownFace,
    UnknownVertex,
)

Dart = tuple[int, int]


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[Dart, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Boundary vertices in walk order (repeats possible on bridges)."""
        return tuple(u for u, _ in self.darts)

    def edges(self) -> set[frozenset]:
        return {frozenset(d) for d in self.darts}


class PlaneGraph:
    """Immutable plane graph; construct with :func:`build_from_rotation`."""

    __slots__ = ("rotation", "adj", "_pos", "_faces", "_dart_face", "_edges", "_hash")

    def __init__(self, rotation: Mapping[int, Sequence[int]]):
        rot = {int(v): tuple(int(u) for u in nbrs) for v, nbrs in rotation.items()}
        _validate(rot)
        self.rotation: dict[int, tuple[int, ...]] = dict(sorted(rot.items()))
        self.adj: dict[int, frozenset[int]] = {v: frozenset(n) for v, n in self.rotation.items()}
        self._pos = {v: {u: i for i, u in enumerate(n)} for v, n in self.rotation.items()}
        self._edges = sorted({(min(u, v), max(u, v)) for u in rot for v in rot[u]})
        self._faces, self._dart_face = _trace_faces(self.rotation, self._pos)
        self._hash = None
        nv, ne, nf = len(self.rotation), len(self._edges), len(self._faces)
        if nv - ne + nf != 2:
            raise EulerViolation(
                f"V - E + F = {nv} - {ne} + {nf} = {nv - ne + nf}, rotation system is not planar"
            )

    # -- basic queries -------------------------------------------------
    @property
    def vertices(self) -> list[int]:
        return list(self.rotation)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(self._edges)

    @property
    def faces(self) -> list[Face]:
        return list(self._faces)

    def __len__(self) -> int:
        return len(self.rotation)

    def __contains__(self, v) -> bool:
        return v in self.rotation

    def __repr__(self) -> str:
        return f"PlaneGraph(|V|={len(self)}, |E|={len(self._edges)}, |F|={len(self._faces)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PlaneGraph) and self.rotation == other.rotation

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.rotation.items()))
        return self._hash

    def neighbors(self, v: int) -> tuple[int, ...]:
        try:
            return self.rotation[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())

    def min_degree(self) -> int:
        return min(len(n) for n in self.rotation.values())

    def face(self, fid: int) -> Face:
        if not 0 <= fid < len(self._faces):
            raise UnknownFace(fid)
        return self._faces[fid]

    def face_degree(self, fid: int) -> int:
        return self.face(fid).degree

    def face_of_dart(self, u: int, v: int) -> int:
        try:
            return self._dart_face[(u, v)]
        except KeyError:
            raise UnknownVertex((u, v)) from None

    def incident_faces(self, v: int) -> list[int]:
        """Face ids ``f_1..f_d`` around ``v``; ``f_i`` lies between ``v_i`` and ``v_{i+1}``."""
        return [self._dart_face[(v, u)] for u in self.neighbors(v)]

    def rotation_index(self, v: int, u: int) -> int:
        return self._pos[v][u]

    def faces_at_edge(self, u: int, v: int) -> tuple[int, int]:
        return self._dart_face[(u, v)], self._dart_face[(v, u)]

    # -- derived graphs ------------------------------------------------
    def delete_vertices(self, removed: Iterable[int]) -> list["PlaneGraph"]:
        """Components of ``G - S`` with inherited rotations."""
        gone = set(removed)
        rot = {v: [u for u in n if u not in gone] for v, n in self.rotation.items() if v not in gone}
        return [PlaneGraph(c) for c in _split(rot)]

    def delete_edge(self, u: int, v: int) -> list["PlaneGraph"]:
        if not self.has_edge(u, v):
            raise UnknownVertex((u, v))
        rot = {w: list(n) for w, n in self.rotation.items()}
        rot[u].remove(v)
        rot[v].remove(u)
        return [PlaneGraph(c) for c in _split(rot)]

    def to_text(self) -> str:
        return format_rotation(self.rotation)


def build_from_rotation(rotation_table: Mapping[int, Sequence[int]]) -> PlaneGraph:
    return PlaneGraph(rotation_table)


def faces(G: PlaneGraph) -> list[Face]:
    return G.faces


def degree(G: PlaneGraph, v: int) -> int:
    return G.degree(v)


def face_degree(G: PlaneGraph, f: int) -> int:
    return G.face_degree(f)


def incident_faces(G: PlaneGraph, v: int) -> list[int]:
    return G.incident_faces(v)


def _validate(rot: dict[int, tuple[int, ...]]) -> None:
    if not rot:
        raise Disconnected("empty graph")
    for v, nbrs in rot.items():
        if v in nbrs:
            raise LoopOrMultiEdge(f"loop at vertex {v}")
        if len(set(nbrs)) != len(nbrs):
            raise LoopOrMultiEdge(f"repeated neighbour in rotation of {v}")
        for u in nbrs:
            if u not in rot:
                raise AsymmetricRotation(f"{v} lists {u}, which has no rotation")
            if v not in rot[u]:
                raise AsymmetricRotation(f"{v} lists {u} but {u} does not list {v}")
    start = next(iter(rot))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in rot[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    if len(seen) != len(rot):
        raise Disconnected(f"{len(rot) - len(seen)} vertices unreachable from {start}")


def _trace_faces(rot, pos):
    if all(not n for n in rot.values()):
        # a lone vertex bounds a single face with an empty walk
        return [Face(0, ())], {}
    dart_face: dict[Dart, int] = {}
    out: list[Face] = []
    for v in rot:
        for u in rot[v]:
            if (v, u) in dart_face:
                continue
            fid = len(out)
            walk = []
            a, b = v, u
            while (a, b) not in dart_face:
                dart_face[(a, b)] = fid
                walk.append((a, b))
                nb = rot[b]
                w = nb[pos[b][a] - 1]
                a, b = b, w
            out.append(Face(fid, tuple(walk)))
    return out, dart_face


def _split(rot: dict[int, list[int]]) -> list[dict[int, list[int]]]:
    comps = []
    seen: set[int] = set()
    for s in rot:
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in rot[v]:
                if u not in comp:
                    comp.add(u)
                    queue.append(u)
        seen |= comp
        comps.append({v: rot[v] for v in rot if v in comp})
    return comps


# -- text format -------------------------------------------------------

def parse_rotation(text: str, source: str | None = None) -> dict[int, list[int]]:
    table: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            raise ParseError("expected 'v: n1 n2 ...'", lineno, 1, source)
        head, _, tail = line.partition(":")
        v = _parse_int(head, lineno, raw.find(head.strip()) + 1, source)
        if v in table:
            raise ParseError(f"vertex {v} listed twice", lineno, 1, source)
        nbrs = []
        col = len(head) + 2
        for tok in tail.split():
            col = raw.find(tok, col - 1) + 1
            nbrs.append(_parse_int(tok, lineno, col, source))
            col += len(tok)
        table[v] = nbrs
    if not table:
        raise ParseError("no vertices", None, None, source)
    return table


def _parse_int(tok: str, line: int, col: int, source) -> int:
    tok = tok.strip()
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"not an integer: {tok!r}", line, col, source) from None
    if value < 1:
        raise ParseError(f"vertex ids must be positive, got {value}", line, col, source)
    return value


def format_rotation(rotation: Mapping[int, Sequence[int]]) -> str:
    return "".join(f"{v}: {' '.join(map(str, n))}\n" for v, n in sorted(rotation.items()))


def read_graph(path: str | Path) -> PlaneGraph:
    path = Path(path)
    return PlaneGraph(parse_rotation(path.read_text(), source=str(path)))


def loads(text: str) -> PlaneGraph:
    return PlaneGraph(parse_rotation(text))
