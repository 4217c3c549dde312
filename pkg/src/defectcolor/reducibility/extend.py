"""Constructive extensions: turn a coloring of the reduced graph into one of ``G``.

Every routine works on a mutable color dict that already holds the
reduced coloring.  It colors the deleted vertices and may recolor the
configuration's scratch vertices.  Colors are always picked as the
smallest admissible value, so results are reproducible.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping

from ..coloring import Coloring, check
from ..errors import ExtensionFailed, PartialColoring, WitnessStale
from ..plane_graph import PlaneGraph
from .configs import Configuration, verify_witness

Lists = Mapping[int, Iterable[int]]


def _pick(options, what) -> int:
    if not options:
        raise ExtensionFailed(f"no admissible color for {what}")
    return min(options)


def _free(G: PlaneGraph, col: dict, L: Lists, w: int, S) -> set[int]:
    """Colors of ``L(w)`` unused by colored neighbours outside ``S``."""
    return set(L[w]) - {col[u] for u in G.rotation[w] if u not in S and u in col}


def _avoid_all(G: PlaneGraph, col: dict, L: Lists, w: int, skip=()) -> set[int]:
    return set(L[w]) - {col[u] for u in G.rotation[w] if u not in skip and u in col}


def _repair(G, col, L, c, s, p, S) -> None:
    """``c`` has just taken the color of ``s``; give ``s`` a new color.

    A 3-vertex ``s`` avoids its outside neighbour and ``c``.  A 4-vertex
    ``s`` first has its two outside neighbours recolored away from the
    rest of the coloring, then avoids ``c`` and one further color chosen so
    that at most one neighbour can clash.
    """
    if len(G.rotation[s]) == 3:
        col[s] = _pick(_free(G, col, L, s, S) - {col[c]}, s)
        return
    x, y = (u for u in G.rotation[s] if u not in (c, p))
    del col[s]
    for z in (x, y):
        col[z] = _pick(_avoid_all(G, col, L, z, skip=(s,)), z)
    second = col[x] if col[p] not in (col[x], col[y]) else col[p]
    col[s] = _pick(set(L[s]) - {col[c], second}, s)


def star(G, col, L, c, W, s=None, p=None) -> None:
    """Color the neighbours ``W`` of ``c`` from their induced lists, then ``c``.

    ``c`` takes a color appearing at most once on ``W``.  If every color
    left for ``c`` appears twice, ``c`` copies the color of ``s`` and ``s``
    is repaired.
    """
    S = {c, *W}
    for v in S:
        col.pop(v, None)
    free = {w: _free(G, col, L, w, S) for w in W}
    for w in W:
        col[w] = _pick(free[w], w)
    counts = Counter(col[w] for w in W)
    options = _free(G, col, L, c, S)
    for a in sorted(options):
        if counts[a] <= 1:
            col[c] = a
            return
    if s is None:
        raise ExtensionFailed(f"every color at {c} is used twice on its neighbours")
    col[c] = col[s]
    _repair(G, col, L, c, s, p, S)


# -- per kind -------------------------------------------------------------------

def _ext_A1(G, cfg, col, L):
    v = cfg["v"]
    col[v] = _pick(_avoid_all(G, col, L, v), v)


def _ext_A2(G, cfg, col, L):
    S = cfg.delete
    free = {w: _free(G, col, L, w, S) for w in (cfg["u"], cfg["v"])}
    for w, opts in free.items():
        col[w] = _pick(opts, w)


def _ext_A3(G, cfg, col, L):
    S = cfg.delete
    a, b, c = cfg["a"], cfg["b"], cfg["c"]
    free = {w: _free(G, col, L, w, S) for w in (a, b, c)}
    col[b] = _pick(free[b], b)
    col[c] = _pick(free[c], c)
    col[a] = _pick(free[a] - {col[b]}, a)


def _ext_star5(G, cfg, col, L):
    star(G, col, L, cfg["v"], [cfg[k] for k in ("v1", "v2", "v3", "v4")], cfg["v1"], cfg["v2"])


def _ext_B1(G, cfg, col, L):
    star(G, col, L, cfg["v"], [cfg["v1"], cfg["v2"], cfg["v3"]])


def _ext_B2(G, cfg, col, L):
    if check(G, L, col, 1):
        return
    tri = (cfg["v1"], cfg["v2"], cfg["v3"])
    lead = None
    for a in tri[:2]:
        if any(col[u] == col[a] for u in G.rotation[a] if u not in tri):
            lead = a
            break
    if lead is None:
        raise ExtensionFailed("no endpoint of the deleted edge has a clashing outside neighbour")
    new = {w: _pick(_free(G, col, L, w, tri), w) for w in tri}
    if len(set(new.values())) == 1:
        new[lead] = col[lead]
    col.update(new)


def _ext_B3(G, cfg, col, L):
    if check(G, L, col, 1):
        return
    v1, v2, v3 = cfg["v1"], cfg["v2"], cfg["v3"]
    tri = (v1, v2, v3)
    for a in (v2, v3):
        outs = [u for u in G.rotation[a] if u not in tri]
        clash = [u for u in outs if col[u] == col[a]]
        if clash:
            break
    else:
        raise ExtensionFailed("no light endpoint has a clashing outside neighbour")
    x = clash[0]
    (y,) = [u for u in outs if u != x]
    old = col.pop(a)
    col[y] = _pick(_avoid_all(G, col, L, y, skip=(a,)), y)
    rest = set(L[a]) - {old, col[v1], col[y]}
    col[a] = min(rest) if rest else col[y]


def _ext_B5(G, cfg, col, L):
    W = [cfg[f"v{i}"] for i in range(1, 7)]
    star(G, col, L, cfg["v"], W, cfg["v5"], cfg["v6"])


def _ext_F1(G, cfg, col, L):
    S = cfg.delete
    u, v, x, y = cfg["u"], cfg["v"], cfg["x"], cfg["y"]
    free = {w: _free(G, col, L, w, S) for w in (u, v, x, y)}
    col[v] = _pick(free[v], v)
    col[y] = _pick(free[y], y)
    col[u] = _pick(free[u] - {col[v]}, u)
    col[x] = _pick(free[x] - {col[y]}, x)


def _ext_F2(G, cfg, col, L):
    S = cfg.delete
    u, v, x, y = cfg["u"], cfg["v"], cfg["x"], cfg["y"]
    x1, x2 = (w for w in G.rotation[x] if w not in (u, v, y))
    free = {w: _free(G, col, L, w, S) for w in (u, v, y, x1, x2)}
    for w in (v, y, x1, x2):
        col[w] = _pick(free[w], w)
    col[u] = _pick(free[u] - {col[v]}, u)
    if col[v] in (col[x1], col[x2]):
        col[x] = _pick(set(L[x]) - {col[v], col[y]}, x)
    else:
        col[x] = _pick(set(L[x]) - {col[x1], col[y]}, x)


def _ext_SOFT(G, cfg, col, L):
    S = cfg.delete
    u, x, y, v = cfg["u"], cfg["x"], cfg["y"], cfg["v"]
    u1, u2 = (w for w in G.rotation[u] if w not in (x, v))
    v1, v2 = (w for w in G.rotation[v] if w not in (y, u))
    free = {w: _free(G, col, L, w, S) for w in (u1, u2, v1, v2)}
    for w, opts in free.items():
        col[w] = _pick(opts, w)
    for a, a_out, a_pair, b, b_out, b_pair in ((u, x, (u1, u2), v, y, (v1, v2)),
                                             (v, y, (v1, v2), u, x, (u1, u2))):
        own = set(L[a]) - {col[a_out], col[a_pair[0]], col[a_pair[1]]}
        if own:
            col[a] = min(own)
            counts = Counter((col[a], col[b_pair[0]], col[b_pair[1]]))
            opts = [c for c in sorted(set(L[b]) - {col[b_out]}) if counts[c] <= 1]
            col[b] = _pick(opts, b)
            return
    col[u] = col[u1]
    col[v] = _pick(set(L[v]) - {col[u1], col[y]}, v)


def _ext_C1(G, cfg, col, L):
    star(G, col, L, cfg["v"], [cfg[f"v{i}"] for i in range(1, 6)])


def _ext_C2(G, cfg, col, L):
    v, v1, v2, v3, v4, v5 = (cfg[k] for k in ("v", "v1", "v2", "v3", "v4", "v5"))
    W = [v1, v2, v3, v5]
    if len(G.rotation[v3]) == 3:
        star(G, col, L, v, W, v1, v2)
        return
    x3, y3 = (u for u in G.rotation[v3] if u not in (v, v4))
    for z in (x3, y3):
        col[z] = _pick(_avoid_all(G, col, L, z, skip=(v3,)), z)
    if set(L[v3]) - {col[x3], col[y3], col[v4]}:
        star(G, col, L, v, W, v1, v2)
        return
    S = cfg.delete
    free = {w: _free(G, col, L, w, S) for w in (v1, v2, v5)}
    for w, opts in free.items():
        col[w] = _pick(opts, w)
    counts = Counter(col[w] for w in (v1, v2, v5))
    opts = [c for c in sorted(set(L[v]) - {col[v4]}) if counts[c] <= 1]
    col[v] = _pick(opts, v)
    col[v3] = _pick({col[x3], col[y3]} - {col[v]}, v3)


def _ext_KEY(G, cfg, col, L):
    u, v, w = cfg["u"], cfg["v"], cfg["w"]
    vs = [cfg["v1"], cfg["v2"], cfg["v3"]]
    ws = [cfg["w1"], cfg["w2"], cfg["w3"]]
    S = cfg.delete
    free = {z: _free(G, col, L, z, S) for z in ws}
    for z in ws:
        col[z] = _pick(free[z], z)
    if set(L[w]) - {col[u], *(col[z] for z in ws)}:
        star(G, col, L, v, vs + [w], vs[0], vs[1])
        return
    counts = Counter(col[z] for z in ws)
    opts = [c for c in sorted(set(L[w]) - {col[u]}) if counts[c] == 1]
    a = _pick(opts, w)
    col[w] = a
    free = {z: _free(G, col, L, z, S) for z in vs}
    for z in vs:
        col[z] = _pick(free[z], z)
    counts = Counter(col[z] for z in vs + [w])
    opts = [c for c in sorted(set(L[v]) - {col[u]}) if counts[c] <= 1]
    if opts:
        col[v] = opts[0]
    else:
        col[v] = col[vs[0]]
        _repair(G, col, L, v, vs[0], vs[1], {v, *vs, w})
    if col[v] == col[w]:
        for z in [w] + ws:
            del col[z]
        star(G, col, L, w, ws + [v], ws[0], ws[1])


EXTENDERS = {
    "A1_smallDegree": _ext_A1,
    "A2_adjacent3s": _ext_A2,
    "A3_face344": _ext_A3,
    "Q_lemma2": _ext_star5,
    "B1_fourVertexThree3s": _ext_B1,
    "B2_face444": _ext_B2,
    "B3_lightLightFace": _ext_B3,
    "B4_fiveVertex": _ext_star5,
    "B5_sixVertex": _ext_B5,
    "F1_34m4face": _ext_F1,
    "F2_softOpposite": _ext_F2,
    "SOFT_adjacentSoft": _ext_SOFT,
    "C1": _ext_C1,
    "C2": _ext_C2,
    "C3": _ext_star5,
    "KEY_twoBad5s": _ext_KEY,
}


def reduce(G: PlaneGraph, cfg: Configuration) -> list[PlaneGraph]:
    """Components of the reduced graph (``G - S`` or ``G - e``)."""
    if not verify_witness(G, cfg):
        raise WitnessStale(cfg.to_text())
    if cfg.edge is not None:
        return G.delete_edge(*cfg.edge)
    if len(cfg.delete) == len(G):
        return []
    return G.delete_vertices(cfg.delete)


def extend(G: PlaneGraph, cfg: Configuration, pi: Mapping[int, int], L: Lists,
           verify: bool = True) -> Coloring:
    """Extend ``pi`` (a coloring of the reduced graph) to an ``(L, 1)``-coloring of ``G``.

    The result is always re-checked; any failure raises
    :class:`ExtensionFailed`.
    """
    if verify and not verify_witness(G, cfg):
        raise WitnessStale(cfg.to_text())
    kept = [v for v in G.vertices if v not in cfg.delete]
    missing = [v for v in kept if v not in pi]
    if missing:
        raise PartialColoring(f"reduced coloring misses {missing[:5]}")
    col = {v: pi[v] for v in kept}
    EXTENDERS[cfg.kind](G, cfg, col, L)
    res = check(G, L, col, 1)
    if not res:
        detail = "; ".join(str(x) for x in res.violations[:3])
        raise ExtensionFailed(f"{cfg.to_text()}: {detail}")
    allowed = cfg.recolorable | cfg.scratch
    moved = [v for v in kept if col[v] != pi[v] and v not in allowed]
    if moved:
        raise ExtensionFailed(f"{cfg.to_text()}: recolored protected vertices {moved}")
    return col
