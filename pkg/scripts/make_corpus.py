"""Regenerate the shipped corpus of rotation files.

Each file starts with an ``# expect`` line recording class membership,
girth and the configuration kinds present; ``defectcolor scan`` re-checks
these on load.

    python3 scripts/make_corpus.py [outdir]
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

from defectcolor import generators as g
from defectcolor.cli import expectations, format_expect
from defectcolor.plane_graph import PlaneGraph, format_rotation
from defectcolor.reducibility.oracle import build_template

OUT = Path(__file__).resolve().parent.parent / "src" / "defectcolor" / "corpus"


def light4():
    # v on the 3-face [v a b], with two off-face 3-neighbours x, y
    core = {"v": ["a", "b", "x", "y"], "a": ["b", "v"], "b": ["v", "a"]}
    return build_template("fixture", "light4", core, {"a": 1, "b": 2, "x": 2, "y": 2}, ["v"]).graph.rotation


def soft4():
    # w on the 4-face [w a c b], with two off-face 3-neighbours x, y
    core = {"w": ["a", "b", "x", "y"], "a": ["c", "w"], "c": ["b", "a"], "b": ["w", "c"]}
    return build_template("fixture", "soft4", core, {"a": 1, "b": 1, "c": 1, "x": 2, "y": 2}, ["w"]).graph.rotation


def bad5(d3: int = 3, d4: int = 3):
    # u with 3-faces [u v1 v2] (v1 a 3-vertex, v2 a 4-vertex) and [u v3 v4], fifth neighbour v5 of degree 3
    core = {"u": ["v1", "v2", "v5", "v3", "v4"], "v1": ["v2", "u"], "v2": ["u", "v1"],
            "v3": ["v4", "u"], "v4": ["u", "v3"]}
    leaves = {"v1": 1, "v2": 2, "v5": 2, "v3": d3 - 2, "v4": d4 - 2}
    return build_template("fixture", "bad5", core, leaves, ["u"]).graph.rotation


def _distances(rot, src):
    dist, frontier = {src: 0}, [src]
    while frontier:
        nxt = []
        for v in frontier:
            for u in rot[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def fixtures() -> dict[str, dict[int, list[int]]]:
    dod = g.dodecahedron()
    v0 = min(dod)
    far = max(dod)
    out = {
        "c3": g.cycle(3), "c5": g.cycle(5), "k2": g.path(2), "p3": g.path(3), "k4": g.k4(),
        "cube": g.cube(), "octahedron": g.octahedron(), "dodecahedron": dod,
        "icosahedron": g.icosahedron(),
        "light4": light4(), "soft4": soft4(), "bad5": bad5(),
        # the second 3-face of the bad vertex becomes a (4,5,5)- and a (5,5,5)-face
        "bad5_face455": bad5(4, 5), "bad5_face555": bad5(5, 5),
        "dodecahedron_minus_vertex": g.delete_vertex(dod, v0),
        "dodecahedron_minus_edge": g.delete_edge(dod, v0, dod[v0][0]),
        "dodecahedron_subdivided": g.subdivide(dod, v0, dod[v0][0]),
        "dodecahedron_truncated": g.truncate_vertex(dod, v0),
    }
    # two 4-faces meeting at a vertex plus a far-away triangle
    con = g.contract_edge(dod, v0, dod[v0][0])
    out["dodecahedron_contracted_truncated"] = g.truncate_vertex(con, far)
    # two disjoint contractions give two nonadjacent 4-face pairs
    dist = _distances(con, v0)
    mid = min(v for v in con if dist[v] >= 4)
    out["dodecahedron_double_contracted"] = g.contract_edge(con, mid, con[mid][0])
    rng = random.Random(20240601)
    for i in range(4):
        out[f"thinned_{i + 1}"] = g.random_class_member(rng.randint(14, 28), rng)
    # seeds picked by a greedy cover so that the fixtures exercise most rule ids
    for seed in (116, 299, 387, 671, 1175, 2701):
        rng = random.Random(seed)
        out[f"rules_{seed}"] = g.random_class_member(rng.randint(20, 30), rng)
    return out


def main(argv: list[str]) -> int:
    outdir = Path(argv[1]) if len(argv) > 1 else OUT
    outdir.mkdir(parents=True, exist_ok=True)
    for name, rot in fixtures().items():
        G = PlaneGraph(g.relabel(rot))
        head = format_expect(expectations(G))
        (outdir / f"{name}.rot").write_text(f"# {name}\n{head}\n" + format_rotation(G.rotation))
        print(name, head)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
