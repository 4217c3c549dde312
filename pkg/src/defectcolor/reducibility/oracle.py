"""Exhaustive validation of the extension routines on small local templates.

A template is a concrete plane graph holding one configuration, with every
outside neighbour drawn explicitly (mostly as leaves).  Cases are list
assignments and reduced colorings at the tight end of each configuration's bounds:

* a deleted vertex ``s`` gets an induced list ``I(s)`` of size
  ``3 - #outside neighbours``; its full list adds one private color per
  outside neighbour, which that neighbour wears;
* a recolorable outside vertex ``x`` (a 3-neighbour of a light 4-vertex)
  has full list ``{r, pi(x), f}`` with its two leaves colored ``pi(x)`` and
  ``f``, so only ``r`` is left when it is recolored; when ``pi(x) = r`` the
  leaves wear private colors instead;
* for the two edge-deletion kinds the lists and colors of the face and its
  neighbours are enumerated directly, restricted to reduced colorings that
  clash across the deleted edge (otherwise the reduced coloring is already
  valid on ``G`` and the extension is the identity).

Colors are numbered by first use, and a new slot may only reuse colors
already placed within distance 2 of it in the template.  Colors further
apart are never compared by an extension or a defect count.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from ..coloring import Prepared
from ..errors import CounterexampleFound, ExtensionFailed, PreconditionViolation
from ..plane_graph import PlaneGraph
from .configs import KINDS, REGISTRY, Configuration
from .extend import EXTENDERS

PRIVATE = 10_000


# -- templates -------------------------------------------------------------------

@dataclass
class Template:
    kind: str
    variant: str
    graph: PlaneGraph
    roles: dict[str, int]
    names: dict[str, int]

    @property
    def label(self) -> str:
        return f"{self.kind}[{self.variant}]" if self.variant else self.kind


def build_template(kind: str, variant: str, core: dict[str, list[str]],
                   leaves: dict[str, int], roles: list[str]) -> Template:
    """Number named vertices in order of appearance and hang ``leaves[name]`` leaves on each.

    Leaves are appended to the rotation, so the corner between the last and
    first listed neighbour must lie on the outer face.
    """
    names: dict[str, int] = {}
    for v, nbrs in core.items():
        for x in (v, *nbrs):
            names.setdefault(x, len(names) + 1)
    rot = {names[v]: [names[u] for u in core.get(v, ())] for v in names}
    for v in names:
        if v not in core:
            # implicit back-edges for vertices named only as neighbours
            rot[names[v]] = [names[u] for u, nbrs in core.items() if v in nbrs]
    nxt = len(names) + 1
    for v, k in leaves.items():
        for _ in range(k):
            rot[names[v]].append(nxt)
            rot[nxt] = [names[v]]
            nxt += 1
    G = PlaneGraph(rot)
    return Template(kind, variant, G, {r: names[r] for r in roles}, names)


def _s_part(core, leaves, s, light: bool) -> str:
    if light:
        x, y = f"x_{s}", f"y_{s}"
        core[s] += [x, y]
        leaves[x] = leaves[y] = 2
        return "light"
    leaves[s] = leaves.get(s, 0) + 1
    return "3"


def _t_A1():
    return [build_template("A1_smallDegree", "", {"v": ["a", "b"]}, {"a": 2, "b": 2}, ["v"])]


def _t_A2():
    return [build_template("A2_adjacent3s", "", {"u": ["v"], "v": ["u"]}, {"u": 2, "v": 2}, ["u", "v"])]


def _t_A3():
    core = {"a": ["b", "c"], "b": ["c", "a"], "c": ["a", "b"]}
    return [build_template("A3_face344", "", core, {"a": 1, "b": 2, "c": 2}, ["a", "b", "c"])]


def _star5(kind, light, tri34):
    core = {"v": ["v1", "v2", "v3", "v4", "v5"], "v1": ["v2", "v"], "v2": ["v", "v1"]}
    leaves = {"v2": 2}
    if tri34:
        core["v3"] = ["v4", "v"]
        core["v4"] = ["v", "v3"]
        leaves.update(v3=2, v4=2)
    else:
        core["v3"] = ["v"]
        core["v4"] = ["v"]
        leaves.update(v3=2, v4=2)
    core["v5"] = ["v"]
    tag = _s_part(core, leaves, "v1", light)
    variant = f"v1={tag}" + (",v3v4-face" if tri34 else "")
    return build_template(kind, variant, core, leaves, ["v", "v1", "v2", "v3", "v4"])


def _t_Q():
    return [_star5("Q_lemma2", light, tri) for tri in (False, True) for light in (False, True)]


def _t_B4():
    return [_star5("B4_fiveVertex", light, False) for light in (False, True)]


def _t_B1():
    core = {"v": ["a", "b", "c", "d"], "a": ["v"], "b": ["v"], "c": ["v"], "d": ["v"]}
    t = build_template("B1_fourVertexThree3s", "", core, {"a": 2, "b": 2, "c": 2}, ["v", "a", "b", "c"])
    t.roles = {"v": t.names["v"], "v1": t.names["a"], "v2": t.names["b"], "v3": t.names["c"]}
    return [t]


def _t_B2():
    core = {"v1": ["v2", "v3", "x1", "y1"], "v2": ["v3", "v1", "x2", "y2"],
            "v3": ["v1", "v2", "x3", "y3"]}
    return [build_template("B2_face444", "", core, {}, ["v1", "v2", "v3"])]


def _t_B3():
    core = {"v1": ["v2", "v3"], "v2": ["v3", "v1", "x2", "y2"], "v3": ["v1", "v2", "x3", "y3"]}
    leaves = {"v1": 3, "x2": 2, "y2": 2, "x3": 2, "y3": 2}
    return [build_template("B3_lightLightFace", "", core, leaves, ["v1", "v2", "v3"])]


def _t_B5():
    out = []
    for light in (False, True):
        core = {"v": ["v1", "v2", "v3", "v4", "v5", "v6"],
                "v1": ["v2", "v"], "v2": ["v", "v1"], "v3": ["v4", "v"], "v4": ["v", "v3"],
                "v5": ["v6", "v"], "v6": ["v", "v5"]}
        leaves = {"v1": 2, "v2": 2, "v3": 2, "v4": 2, "v6": 2}
        tag = _s_part(core, leaves, "v5", light)
        out.append(build_template("B5_sixVertex", f"v5={tag}", core, leaves,
                                  ["v", "v1", "v2", "v3", "v4", "v5", "v6"]))
    return out


def _t_F1():
    core = {"u": ["v", "y"], "v": ["x", "u"], "x": ["y", "v"], "y": ["u", "x"]}
    return [build_template("F1_34m4face", "", core, {"u": 1, "v": 2, "x": 1, "y": 2}, ["u", "v", "x", "y"])]


def _t_F2():
    core = {"u": ["v", "y"], "v": ["x", "u"], "x": ["y", "v", "x1", "x2"], "y": ["u", "x"]}
    leaves = {"u": 1, "v": 2, "y": 2, "x1": 2, "x2": 2}
    return [build_template("F2_softOpposite", "", core, leaves, ["u", "v", "x", "y"])]


def _t_SOFT():
    core = {"u": ["x", "v", "u1", "u2"], "x": ["y", "u"], "y": ["v", "x"], "v": ["u", "y", "v1", "v2"]}
    leaves = {"x": 1, "y": 1, "u1": 2, "u2": 2, "v1": 2, "v2": 2}
    return [build_template("SOFT_adjacentSoft", "", core, leaves, ["u", "x", "y", "v"])]


def _two_tri(kind, light1, mode3):
    core = {"v": ["v1", "v2", "v3", "v4", "v5"], "v1": ["v2", "v"], "v2": ["v", "v1"],
            "v3": ["v4", "v"], "v4": ["v", "v3"], "v5": ["v"]}
    leaves = {"v2": 2, "v4": 2}
    tag1 = _s_part(core, leaves, "v1", light1)
    if mode3 == "light-scratch":
        tag3 = _s_part(core, leaves, "v3", True)
    elif mode3 == "light":
        core["v3"] += ["p3", "q3"]
        leaves.update(p3=2, q3=2)
        tag3 = "light"
    else:
        leaves["v3"] = 1
        tag3 = "3"
    return core, leaves, f"v1={tag1},v3={tag3}"


def _t_C1():
    core = {"v": ["v1", "v2", "v3", "v4", "v5"], "v1": ["v2", "v"], "v2": ["v", "v1"],
            "v3": ["v4", "v"], "v4": ["v", "v3"], "v5": ["v"]}
    leaves = {"v1": 2, "v2": 2, "v3": 2, "v4": 2, "v5": 2}
    return [build_template("C1", "", core, leaves, ["v", "v1", "v2", "v3", "v4", "v5"])]


def _t_C2():
    out = []
    for light1 in (False, True):
        for light3 in (False, True):
            core, leaves, variant = _two_tri("C2", light1, "light-scratch" if light3 else "3")
            leaves["v5"] = 2
            out.append(build_template("C2", variant, core, leaves, ["v", "v1", "v2", "v3", "v4", "v5"]))
    return out


def _t_C3():
    out = []
    for light1 in (False, True):
        for light3 in (False, True):
            core, leaves, variant = _two_tri("C3", light1, "light" if light3 else "3")
            out.append(build_template("C3", variant, core, leaves, ["v", "v1", "v2", "v3", "v4", "v5"]))
    return out


def _t_KEY():
    out = []
    for lv in (False, True):
        for lw in (False, True):
            core = {
                "u": ["w", "v"],
                "v": ["u", "w", "v3", "v1", "v2"],
                "w": ["v", "u", "w3", "w1", "w2"],
                "v1": ["v2", "v"], "v2": ["v", "v1"], "v3": ["v"],
                "w1": ["w2", "w"], "w2": ["w", "w1"], "w3": ["w"],
            }
            leaves = {"u": 2, "v2": 2, "v3": 2, "w2": 2, "w3": 2}
            tv = _s_part(core, leaves, "v1", lv)
            tw = _s_part(core, leaves, "w1", lw)
            out.append(build_template("KEY_twoBad5s", f"v1={tv},w1={tw}", core, leaves,
                                      ["u", "v", "w", "v1", "v2", "v3", "w1", "w2", "w3"]))
    return out


TEMPLATE_BUILDERS: dict[str, Callable[[], list[Template]]] = {
    "A1_smallDegree": _t_A1,
    "A2_adjacent3s": _t_A2,
    "A3_face344": _t_A3,
    "Q_lemma2": _t_Q,
    "B1_fourVertexThree3s": _t_B1,
    "B2_face444": _t_B2,
    "B3_lightLightFace": _t_B3,
    "B4_fiveVertex": _t_B4,
    "B5_sixVertex": _t_B5,
    "F1_34m4face": _t_F1,
    "F2_softOpposite": _t_F2,
    "SOFT_adjacentSoft": _t_SOFT,
    "C1": _t_C1,
    "C2": _t_C2,
    "C3": _t_C3,
    "KEY_twoBad5s": _t_KEY,
}


def templates(kind: str) -> list[Template]:
    return TEMPLATE_BUILDERS[kind]()


def configuration_of(t: Template) -> Configuration:
    res = REGISTRY[t.kind][1](t.graph, t.roles)
    if res is None:
        raise PreconditionViolation(f"template {t.label} does not satisfy the hypothesis of {t.kind}")
    S, edge, scratch, recolorable = res
    return Configuration(t.kind, dict(t.roles), S, edge, scratch, recolorable)


# -- slots and canonical enumeration ----------------------------------------------

@dataclass
class Slot:
    name: str
    vertex: int
    kind: str  # "set", "color" or "member"
    size: int = 1
    of: str | None = None
    not_in: tuple[str, ...] = ()
    contains: tuple[str, ...] = ()
    # a silent slot reuses nearby colors but never offers its own to later slots
    silent: bool = False


def _near(G: PlaneGraph, core: set[int], radius: int = 2) -> dict[int, set[int]]:
    out = {}
    for s in core:
        seen = {s: 0}
        queue = deque([s])
        while queue:
            a = queue.popleft()
            if seen[a] == radius:
                continue
            for b in G.rotation[a]:
                if b in core and b not in seen:
                    seen[b] = seen[a] + 1
                    queue.append(b)
        out[s] = set(seen)
    return out


Probe = Callable[[dict, list], list]


def enumerate_slots(slots: list[Slot], near: dict[int, set[int]],
                    groups: list[list[Slot]] = (), probe: Probe | None = None) -> Iterator[dict]:
    """Canonical assignments: new colors are numbered by first use.

    A slot may reuse only colors already placed at vertices in
    ``near[slot.vertex]``.  ``groups`` are enumerated lazily after
    ``slots``: ``probe(vals, pending)`` returns the indices of pending
    groups whose values can matter, and an empty answer ends the branch.
    The yielded dict is reused; copy it to keep it.
    """
    vals: dict = {}
    placed: dict[int, list[int]] = {}
    top = [0]

    def colors_of(name):
        v = vals[name]
        return v if isinstance(v, frozenset) else {v}

    def options(sl):
        banned = set()
        for n in sl.not_in:
            banned |= colors_of(n)
        if sl.kind == "member":
            yield from (c for c in sorted(vals[sl.of]) if c not in banned)
            return
        dom = set()
        for q in near[sl.vertex]:
            dom.update(placed.get(q, ()))
        dom -= banned
        if sl.kind == "color":
            yield from sorted(dom)
            yield top[0] + 1
            return
        forced = set()
        for n in sl.contains:
            forced |= colors_of(n)
        k = sl.size - len(forced)
        dom -= forced
        for new in range(k + 1):
            fresh = range(top[0] + 1, top[0] + new + 1)
            for old in combinations(sorted(dom), k - new):
                yield frozenset(forced) | frozenset(old) | frozenset(fresh)

    def run(seq, i, pending):
        if i == len(seq):
            if not pending:
                yield vals
                return
            need = probe(vals, pending) if probe is not None else [0]
            if not need:
                return
            j = need[0]
            yield from run(pending[j], 0, pending[:j] + pending[j + 1:])
            return
        sl = seq[i]
        for value in list(options(sl)):
            cols = list(value) if isinstance(value, frozenset) else [value]
            vals[sl.name] = value
            lst = placed.setdefault(sl.vertex, [])
            n0, t0 = len(lst), top[0]
            if not sl.silent:
                lst.extend(cols)
            top[0] = max([t0, *cols])
            yield from run(seq, i + 1, pending)
            del lst[n0:]
            top[0] = t0
            del vals[sl.name]

    yield from run(list(slots), 0, [list(g) for g in groups if g])


# -- case construction ------------------------------------------------------------

PLACEHOLDER = 50_000


class _Instance:
    """Template plus the machinery to turn slot values into (pi, L)."""

    def __init__(self, t: Template):
        self.t = t
        self.cfg = configuration_of(t)
        G = self.G = t.graph
        cfg = self.cfg
        self.S = set(cfg.delete)
        self.scratch = set(cfg.scratch)
        self.base_col = {v: PRIVATE + v for v in G.vertices}
        self.slots: list[Slot] = []
        self.groups: list[list[Slot]] = []
        self.group_vertices: list[set[int]] = []
        self.pairs: list[tuple[tuple[str, ...], tuple[str, ...]]] = []
        if cfg.edge is None:
            self._vertex_slots()
        else:
            self._edge_slots()
        every = self.slots + [sl for g in self.groups for sl in g]
        core = self.S | self.scratch | set(cfg.recolorable) | {sl.vertex for sl in every}
        self.near = _near(G, core)
        for sl in every:
            if sl.silent:
                self.near[sl.vertex] = {sl.vertex, *G.rotation[sl.vertex]}
        for v, keep in self.restrict.items():
            self.near[v] &= keep
        watch = set(core)
        for v in core:
            watch.update(G.rotation[v])
        self.watch = sorted(watch)
        self.allowed = set(cfg.recolorable) | self.scratch | self.S

    def _leaves_of(self, x: int, s: int) -> list[int]:
        return [u for u in self.G.rotation[x] if u != s]

    def _gadget(self, s: int, xs: list[int], not_in: tuple[str, ...]) -> list[Slot]:
        out, prev = [], []
        for x in xs:
            if len(self._leaves_of(x, s)) != 2:
                raise PreconditionViolation(f"{self.t.label}: scratch vertex {x} is not a 3-vertex")
            out.append(Slot(f"p{x}", x, "color", not_in=(*not_in, *prev)))
            out.append(Slot(f"r{x}", x, "color"))
            prev.append(f"p{x}")
        return out

    def _vertex_slots(self):
        G, cfg = self.G, self.cfg
        self.restrict = {}
        order = [v for v in cfg.roles.values() if v in self.S]
        order += sorted(self.S - set(order))
        for s in order:
            sc = [x for x in G.rotation[s] if x in self.scratch]
            outside = [o for o in G.rotation[s] if o not in self.S and o not in self.scratch]
            size = 3 - len(outside) - len(sc)
            if size < (0 if sc else 1):
                raise PreconditionViolation(f"{self.t.label}: vertex {s} has an empty induced list")
            self.slots.append(Slot(f"I{s}", s, "set", size))
            if sc:
                self.groups.append(self._gadget(s, sc, (f"I{s}",)))
                self.group_vertices.append(set(sc))

    def _edge_slots(self):
        """Clashing reduced colorings only, with the clash at the first endpoint.

        The mirror image (clash only at the second endpoint) is the same
        case with the endpoints swapped.  Outside neighbours of one vertex
        are interchangeable, so their values are taken in sorted order.
        """
        G, cfg = self.G, self.cfg
        a, b = cfg.edge
        tri = [cfg["v1"], cfg["v2"], cfg["v3"]]
        self.restrict = {}

        def outs(v):
            return [x for x in G.rotation[v] if x not in tri]

        if cfg.kind == "B2_face444":
            for v in tri:
                contains = (f"P{a}",) if v == b else ()
                self.slots.append(Slot(f"L{v}", v, "set", 3, contains=contains))
                if v != b:
                    self.slots.append(Slot(f"P{v}", v, "member", of=f"L{v}"))
                xs = outs(v)
                for x in xs:
                    self.slots.append(Slot(f"X{x}", x, "color", silent=True))
                self.pairs.append(tuple((f"X{x}",) for x in xs))
            return
        v1 = cfg["v1"]
        self.slots.append(Slot(f"P{v1}", v1, "color"))
        self.slots.append(Slot(f"L{a}", a, "set", 3))
        self.slots.append(Slot(f"P{a}", a, "member", of=f"L{a}"))
        xs = outs(a)
        self.slots.extend(self._gadget(a, xs, ()))
        self.pairs.append(tuple((f"p{x}", f"r{x}") for x in xs))
        # the far endpoint keeps its color, so only its clash pattern matters
        self.slots.append(Slot(f"L{b}", b, "set", 3, contains=(f"P{a}",)))
        self.restrict[b] = {b}
        for x in xs:
            self.restrict[x] = {x, a, v1, *xs}
        ys = outs(b)
        for y in ys:
            self.slots.append(Slot(f"X{y}", y, "color", silent=True))
        self.pairs.append(tuple((f"X{y}",) for y in ys))

    def _scratch_case(self, col, L, x, s, px, rx):
        t1, t2 = self._leaves_of(x, s)
        col[x] = px
        if px != rx:
            col[t1] = px
            L[t1] = frozenset({px})
            L[x] = frozenset({rx, px, self.base_col[t2]})
        else:
            L[x] = frozenset({rx, self.base_col[t1], self.base_col[t2]})

    @staticmethod
    def _get(vals, name, x, offset):
        v = vals.get(name)
        return PLACEHOLDER + 2 * x + offset if v is None else v

    def case(self, vals) -> tuple[dict, dict] | None:
        G, cfg = self.G, self.cfg
        col = dict(self.base_col)
        L = {v: frozenset({c}) for v, c in col.items()}
        if cfg.edge is None:
            for s in self.S:
                extra = {self.base_col[o] for o in G.rotation[s] if o not in self.S and o not in self.scratch}
                del col[s]
                for x in G.rotation[s]:
                    if x in self.scratch:
                        px = self._get(vals, f"p{x}", x, 0)
                        extra.add(px)
                        self._scratch_case(col, L, x, s, px, self._get(vals, f"r{x}", x, 1))
                L[s] = vals[f"I{s}"] | extra
            return col, L
        for pair in self.pairs:
            keys = [tuple(vals[n] for n in names) for names in pair]
            if keys != sorted(keys):
                return None
        a, b = cfg.edge
        for v in (cfg["v1"], cfg["v2"], cfg["v3"]):
            if f"L{v}" in vals:
                L[v] = vals[f"L{v}"]
            col[v] = vals.get(f"P{v}", vals.get(f"P{a}"))
            for x in G.rotation[v]:
                if f"X{x}" in vals:
                    col[x] = vals[f"X{x}"]
                    L[x] = frozenset({col[x]})
                elif f"p{x}" in vals:
                    self._scratch_case(col, L, x, v, vals[f"p{x}"], vals[f"r{x}"])
        if cfg.kind != "B2_face444":
            L[cfg["v1"]] = frozenset({col[cfg["v1"]]})
        if not any(col[x] == col[a] for x in G.rotation[a] if x != b):
            return None
        # the reduced coloring must be valid on G minus the edge
        for v in self.watch:
            same = sum(1 for u in G.rotation[v] if col[u] == col[v] and {u, v} != {a, b})
            if same > 1:
                return None
        return col, L

    def valid(self, col, L) -> bool:
        G = self.G
        for v in self.watch:
            c = col.get(v)
            if c is None or c not in L[v]:
                return False
            if sum(1 for u in G.rotation[v] if col.get(u) == c) > 1:
                return False
        return True

    def exists(self, col, L) -> bool:
        """Brute-force existence of an extension, with outside vertices frozen."""
        free = self.allowed
        lists = {v: (L[v] if v in free else frozenset({col[v]})) for v in self.G.vertices}
        return Prepared(self.G).solve(lists, 1) is not None

    def attempt(self, col, L) -> tuple[bool, dict]:
        pi = dict(col)
        try:
            EXTENDERS[self.cfg.kind](self.G, self.cfg, col, L)
        except ExtensionFailed:
            return False, pi
        ok = self.valid(col, L) and all(col[v] == pi[v] for v in pi if v not in self.allowed)
        return ok, pi


@dataclass
class OracleReport:
    kind: str
    template: str
    cases: int = 0
    collapsed: int = 0
    discrepancies: list[str] = field(default_factory=list)
    inextensible: int = 0
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_text(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"{status} {self.template:<40} cases={self.cases:>8} "
                f"settled-early={self.collapsed:>7} time={self.seconds:.2f}s")


def oracle_verify(kind: str, template: Template | None = None, existence: str = "witness",
                  strict: bool = True, limit: int | None = None) -> list[OracleReport]:
    """Run every case of every template of ``kind`` through the extension.

    ``existence="witness"`` counts a checked extension as a witness that a
    coloring exists and calls the brute-force solver only when the extension fails;
    ``"solve"`` runs the solver on every case as well.
    """
    if kind not in TEMPLATE_BUILDERS:
        raise KeyError(kind)
    tpls = [template] if template is not None else templates(kind)
    reports = [_run(t, existence, limit) for t in tpls]
    if strict:
        bad = [r for r in reports if not r.ok]
        if bad:
            raise CounterexampleFound(f"{bad[0].template}: {bad[0].discrepancies[0]}")
    return reports


class _Stop(Exception):
    pass


def _run(t: Template, existence: str, limit: int | None) -> OracleReport:
    inst = _Instance(t)
    rep = OracleReport(t.kind, t.label)
    start = time.perf_counter()

    def record(vals, col, L, ok, pi):
        rep.cases += 1
        if existence == "solve" and not inst.exists(pi, L):
            rep.inextensible += 1
            rep.discrepancies.append(f"no extension exists: {_fmt(vals)}")
        elif not ok:
            found = inst.exists(pi, L)
            if not found:
                rep.inextensible += 1
            what = "extension exists but was not found" if found else "no extension exists"
            rep.discrepancies.append(f"{what}: {_fmt(vals)}")
        if limit is not None and rep.cases >= limit:
            raise _Stop

    def probe(vals, pending):
        # pending gadgets wear placeholder colors; if the extension leaves
        # them alone their values cannot influence the outcome
        col, L = inst.case(vals)
        ok, pi = inst.attempt(col, L)
        touched = [i for i, g in enumerate(pending)
                   if any(col[sl.vertex] != pi[sl.vertex] for sl in g)]
        if ok and not touched:
            rep.collapsed += 1
            record(vals, col, L, ok, pi)
            return []
        return touched or [0]

    try:
        for vals in enumerate_slots(inst.slots, inst.near, inst.groups, probe):
            built = inst.case(vals)
            if built is None:
                continue
            col, L = built
            ok, pi = inst.attempt(col, L)
            record(vals, col, L, ok, pi)
    except _Stop:
        pass
    rep.seconds = time.perf_counter() - start
    return rep


def _fmt(vals) -> str:
    parts = []
    for k, v in vals.items():
        parts.append(f"{k}={{{','.join(map(str, sorted(v)))}}}" if isinstance(v, frozenset) else f"{k}={v}")
    return " ".join(parts)


def verify_all(existence: str = "witness", strict: bool = False) -> list[OracleReport]:
    out = []
    for kind in KINDS:
        out.extend(oracle_verify(kind, existence=existence, strict=strict))
    return out
