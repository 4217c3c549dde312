"""Small plane-graph families and fixture builders.

All builders return rotation tables (``dict[int, list[int]]``) with
vertices numbered from 1; wrap them in :class:`PlaneGraph` to validate.
"""

from __future__ import annotations

from typing import Mapping, Sequence

import networkx as nx

from .plane_graph import PlaneGraph


def cycle(n: int) -> dict[int, list[int]]:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return {i: [i % n + 1, (i - 2) % n + 1] for i in range(1, n + 1)}


def path(n: int) -> dict[int, list[int]]:
    rot: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
    for i in range(1, n):
        rot[i].append(i + 1)
        rot[i + 1].append(i)
    return rot


def star(k: int) -> dict[int, list[int]]:
    rot = {1: list(range(2, k + 2))}
    rot.update({i: [1] for i in range(2, k + 2)})
    return rot


def wheel(n: int) -> dict[int, list[int]]:
    """Hub 1 joined to the rim cycle 2..n+1."""
    rim = list(range(2, n + 2))
    rot = {1: rim[::-1]}
    for k, v in enumerate(rim):
        nxt, prv = rim[(k + 1) % n], rim[(k - 1) % n]
        rot[v] = [nxt, prv, 1]
    return rot


def prism(n: int) -> dict[int, list[int]]:
    """Outer cycle 1..n, inner cycle n+1..2n, spokes i -- n+i."""
    rot = {}
    for i in range(n):
        o, o_next, o_prev = i + 1, (i + 1) % n + 1, (i - 1) % n + 1
        inner, i_next, i_prev = n + i + 1, n + (i + 1) % n + 1, n + (i - 1) % n + 1
        rot[o] = [o_next, o_prev, inner]
        rot[inner] = [i_next, o, i_prev]
    return rot


def from_networkx(G: nx.Graph) -> dict[int, list[int]]:
    """Rotation table of a planar networkx graph, relabelled 1..n in sorted order."""
    ok, emb = nx.check_planarity(G)
    if not ok:
        raise ValueError("graph is not planar")
    order = sorted(G.nodes(), key=repr)
    label = {v: i + 1 for i, v in enumerate(order)}
    return {label[v]: [label[u] for u in emb.neighbors_cw_order(v)] for v in order}


def k4() -> dict[int, list[int]]:
    return from_networkx(nx.complete_graph(4))


def cube() -> dict[int, list[int]]:
    return from_networkx(nx.hypercube_graph(3))


def octahedron() -> dict[int, list[int]]:
    return from_networkx(nx.octahedral_graph())


def dodecahedron() -> dict[int, list[int]]:
    return from_networkx(nx.dodecahedral_graph())


def icosahedron() -> dict[int, list[int]]:
    return from_networkx(nx.icosahedral_graph())


def relabel(rot: Mapping[int, Sequence[int]]) -> dict[int, list[int]]:
    label = {v: i + 1 for i, v in enumerate(sorted(rot))}
    return {label[v]: [label[u] for u in n] for v, n in rot.items()}


def subdivide(rot: Mapping[int, Sequence[int]], u: int, v: int) -> dict[int, list[int]]:
    new = max(rot) + 1
    out = {w: list(n) for w, n in rot.items()}
    out[u][out[u].index(v)] = new
    out[v][out[v].index(u)] = new
    out[new] = [u, v]
    return out


def delete_vertex(rot: Mapping[int, Sequence[int]], v: int) -> dict[int, list[int]]:
    return {w: [u for u in n if u != v] for w, n in rot.items() if w != v}


def delete_edge(rot: Mapping[int, Sequence[int]], u: int, v: int) -> dict[int, list[int]]:
    out = {w: list(n) for w, n in rot.items()}
    out[u].remove(v)
    out[v].remove(u)
    return out


def truncate_vertex(rot: Mapping[int, Sequence[int]], v: int) -> dict[int, list[int]]:
    """Replace ``v`` by a cycle of new vertices, one per incident edge."""
    out = {w: list(n) for w, n in rot.items() if w != v}
    nbrs = list(rot[v])
    k = len(nbrs)
    base = max(rot) + 1
    ring = [base + i for i in range(k)]
    for i, u in enumerate(nbrs):
        out[u][out[u].index(v)] = ring[i]
    for i, u in enumerate(nbrs):
        # clockwise at v: nbrs[i-1], nbrs[i], nbrs[i+1]; the ring vertex keeps that order
        out[ring[i]] = [u, ring[(i + 1) % k], ring[(i - 1) % k]]
    return out


def insert_in_corner(rot: dict[int, list[int]], v: int, corner: int, new: int) -> None:
    """Insert ``new`` into the rotation at ``v`` between neighbours ``corner`` and ``corner+1``."""
    nb = rot[v]
    if nb:
        nb.insert(corner + 1, new)
    else:
        nb.append(new)


def attach_pendants(rot: Mapping[int, Sequence[int]], counts: Mapping[int, int],
                    avoid_degrees: Sequence[int] = (3, 4)) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
    """Hang ``counts[v]`` new leaves on each ``v``.

    Leaves go into the corner whose face is largest, so small faces of the
    core keep their boundary.  Returns the new table and the leaves per
    vertex.
    """
    out = {w: list(n) for w, n in rot.items()}
    nxt = max(out) + 1
    leaves: dict[int, list[int]] = {}
    for v in sorted(counts):
        G = PlaneGraph(out)
        nb = out[v]
        if nb:
            sizes = [G.face_degree(G.face_of_dart(v, u)) for u in nb]
            best = max(range(len(nb)), key=lambda i: (sizes[i] not in avoid_degrees, sizes[i], -i))
        else:
            best = 0
        for _ in range(counts[v]):
            out[nxt] = [v]
            insert_in_corner(out, v, best, nxt)
            leaves.setdefault(v, []).append(nxt)
            best += 1
            nxt += 1
    return out, leaves


def stacked_triangulation(n: int, rng) -> dict[int, list[int]]:
    """Random triangulation grown by putting each new vertex inside a random triangular face."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rot = {1: [2, 3], 2: [3, 1], 3: [1, 2]}
    for new in range(4, n + 1):
        G = PlaneGraph(rot)
        f = rng.choice(G.faces)
        a, b, c = f.vertices
        # the face's corner at y sits just before x in y's rotation
        for x, y in ((a, b), (b, c), (c, a)):
            rot[y].insert(rot[y].index(x), new)
        rot[new] = [a, b, c]
    return rot


def random_class_member(n: int, rng, max_tries: int = 50) -> dict[int, list[int]]:
    """Connected class member on ``n`` vertices obtained by thinning a random triangulation.

    Edges on a 4-cycle that shares an edge with another short cycle are
    deleted at random until no such pair remains.
    """
    from .structure import in_class

    for _ in range(max_tries):
        rot = stacked_triangulation(n, rng)
        while True:
            rep = in_class(PlaneGraph(rot))
            if rep.in_class:
                return rot
            c4, _, _ = rng.choice(rep.violations)
            edges = [(c4[i], c4[(i + 1) % 4]) for i in range(4)]
            rng.shuffle(edges)
            for u, v in edges:
                trial = delete_edge(rot, u, v)
                if _is_connected(trial):
                    rot = trial
                    break
            else:
                break
    raise RuntimeError("could not thin a triangulation into the class")


def _is_connected(rot: Mapping[int, Sequence[int]]) -> bool:
    start = next(iter(rot))
    seen, stack = {start}, [start]
    while stack:
        for u in rot[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(rot)


def contract_edge(rot: Mapping[int, Sequence[int]], u: int, v: int) -> dict[int, list[int]]:
    """Merge ``v`` into ``u``; ``v``'s other neighbours take ``v``'s place in ``u``'s rotation."""
    if v not in rot[u]:
        raise ValueError(f"{u}-{v} is not an edge")
    nv = list(rot[v])
    k = nv.index(u)
    tail = [w for w in nv[k + 1:] + nv[:k] if w != u]
    if set(tail) & set(rot[u]):
        raise ValueError("contraction would create a multi-edge")
    out = {w: list(n) for w, n in rot.items() if w != v}
    i = out[u].index(v)
    out[u][i:i + 1] = tail
    for w in tail:
        out[w][out[w].index(v)] = u
    return out
