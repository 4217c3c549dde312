"""Compare the compiled and pure-Python search kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is a list of CSR problems; both kernels must return
identical answers before their timings are reported.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from defectcolor import generators as gen
from defectcolor.coloring import canonical_list_systems, random_lists, uniform_lists
from defectcolor.kernels import BACKEND, solve_csr, solve_csr_py
from defectcolor.plane_graph import PlaneGraph


def to_csr(G, L):
    verts = G.vertices
    idx = {v: i for i, v in enumerate(verts)}
    indptr, indices = [0], []
    for v in verts:
        indices.extend(idx[u] for u in G.neighbors(v))
        indptr.append(len(indices))
    lptr, lcol = [0], []
    for v in verts:
        lcol.extend(sorted(L[v]))
        lptr.append(len(lcol))
    order = sorted(range(len(verts)), key=lambda i: (-G.degree(verts[i]), i))
    return indptr, indices, lptr, lcol, order


def workloads():
    c5 = PlaneGraph(gen.cycle(5))
    systems = [dict(zip(c5.vertices, s)) for s in canonical_list_systems(5, 3, 15)]
    yield "C5 all canonical 3-list systems, d=1", [(to_csr(c5, L), 1) for L in systems[::20]]

    ico = PlaneGraph(gen.icosahedron())
    yield "icosahedron, lists {1,2,3}, d=0 (infeasible)", [(to_csr(ico, uniform_lists(ico, 3)), 0)]

    rng = random.Random(7)
    dod = PlaneGraph(gen.dodecahedron())
    probs = [(to_csr(dod, random_lists(dod, 2, 3, rng)), 0) for _ in range(300)]
    yield "dodecahedron, 300 random 2-lists over 3 colors, d=0", probs

    big = PlaneGraph(gen.prism(40))
    yield "prism(40), lists {1,2}, d=0", [(to_csr(big, uniform_lists(big, 2)), 0)]


def timed(fn, problems, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = [fn(*p, d) for p, d in problems]
        best = min(best, time.perf_counter() - start)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if BACKEND != "cython":
        print("compiled kernel not available; build it with: python3 setup.py build_ext --inplace")
        return 1
    print(f"{'workload':<52} {'compiled':>10} {'python':>10} {'speedup':>8}")
    for name, problems in workloads():
        t_c, out_c = timed(solve_csr, problems, args.repeat)
        t_p, out_p = timed(solve_csr_py, problems, args.repeat)
        if out_c != out_p:
            print(f"{name}: kernels disagree", file=sys.stderr)
            return 2
        print(f"{name:<52} {t_c * 1e3:>8.2f}ms {t_p * 1e3:>8.2f}ms {t_p / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
