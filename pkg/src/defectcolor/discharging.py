"""Exact-rational discharging: initial charges, transfer rules and an audit.

Elements are ``("v", id)`` for vertices and ``("f", id)`` for faces.
Every vertex starts at ``3d - 10`` and every face at ``2d - 10``; on a
connected plane graph these sum to -20.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import Disconnected, NotInClass
from .plane_graph import PlaneGraph
from .structure import StructureReport, classify, in_class, is_cycle_face

log = logging.getLogger(__name__)

Element = tuple[str, int]
TOTAL = Fraction(-20)

RULE_IDS = (
    "R1.1", "R1.2", "R1.3a", "R1.3b", "R1.4a", "R1.4b", "R1.5a", "R1.5b",
    "R2.1", "R2.2", "R3.1.1", "R3.1.2", "R3.2.1", "R3.2.2", "R3.3",
    "R4.pendant", "R4.free",
)

F = Fraction
# amounts each rule id may move; R1 schedules are listed in role order
R1_SCHEDULE = {
    "R1.1": (F(0), F(1), F(3)),
    "R1.2": (F(0), F(2), F(2)),
    "R1.3a": (F(0), F(1), F(3)),
    "R1.3b": (F(1), F(1), F(2)),
    "R1.4a": (F(1), F(1), F(2)),
    "R1.4b": (F(0), F(2), F(2)),
    "R1.5a": (F(1), F(3, 2), F(3, 2)),
    "R1.5b": (F(4, 3), F(4, 3), F(4, 3)),
}
FIXED_AMOUNT = {
    "R2.1": F(1), "R2.2": F(4, 3),
    "R3.1.1": F(4, 3), "R3.1.2": F(2, 3), "R3.2.1": F(1), "R3.2.2": F(2, 3), "R3.3": F(2, 3),
    "R4.pendant": F(1), "R4.free": F(1, 3),
}
BIG_TO_TRIANGLE = frozenset({F(3), F(2), F(3, 2), F(4, 3), F(1)})


def label(e: Element) -> str:
    return f"{e[0]}{e[1]}"


@dataclass
class ChargeState:
    charge: dict[Element, Fraction]

    def total(self) -> Fraction:
        return sum(self.charge.values(), Fraction(0))

    def __getitem__(self, e: Element) -> Fraction:
        return self.charge[e]

    def negatives(self) -> list[Element]:
        return [e for e, c in self.charge.items() if c < 0]

    def copy(self) -> "ChargeState":
        return ChargeState(dict(self.charge))


@dataclass(frozen=True)
class Transfer:
    src: Element
    dst: Element
    amount: Fraction
    rule: str

    def to_text(self) -> str:
        a = self.amount
        return f"{self.rule} {label(self.src)} -> {label(self.dst)} : {a.numerator}/{a.denominator}"


@dataclass
class TransferLedger:
    records: list[Transfer] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    _seen: set = field(default_factory=set, repr=False)

    def add(self, src: Element, dst: Element, amount: Fraction, rule: str) -> None:
        if amount == 0:
            return
        if amount < 0 or rule not in RULE_IDS:
            raise ValueError(f"bad transfer {rule} {amount}")
        key = (src, dst, rule)
        if key in self._seen:
            raise ValueError(f"duplicate transfer {key}")
        self._seen.add(key)
        self.records.append(Transfer(src, dst, amount, rule))

    def __iter__(self) -> Iterator[Transfer]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def sent(self, src: Element, dst: Element) -> Fraction:
        return sum((t.amount for t in self.records if t.src == src and t.dst == dst), Fraction(0))

    def to_text(self) -> str:
        return "".join(t.to_text() + "\n" for t in self.records)


def initial_charge(G: PlaneGraph) -> ChargeState:
    if not _connected(G):
        raise Disconnected("charges are defined for connected plane graphs only")
    ch: dict[Element, Fraction] = {}
    for v in G.vertices:
        ch[("v", v)] = Fraction(3 * G.degree(v) - 10)
    for f in G.faces:
        ch[("f", f.id)] = Fraction(2 * f.degree - 10)
    st = ChargeState(ch)
    assert st.total() == TOTAL, st.total()
    return st


def _connected(G: PlaneGraph) -> bool:
    if not len(G):
        return False
    start = G.vertices[0]
    seen, stack = {start}, [start]
    while stack:
        for u in G.neighbors(stack.pop()):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(G)


# -- rules ------------------------------------------------------------------

def _r1_roles(G: PlaneGraph, S: StructureReport, tri: tuple[int, ...], warn: list[str]):
    """Order the triangle's vertices into the rule's roles; ``None`` if no R1 case applies."""
    deg = {v: G.degree(v) for v in tri}
    by = sorted(tri, key=lambda v: (min(deg[v], 5), v))
    d = tuple(min(deg[v], 5) for v in by)

    def pick(cands, what):
        if len(cands) > 1:
            msg = f"3-face on {sorted(tri)}: {len(cands)} {what} vertices, using {min(cands)}"
            log.warning(msg)
            warn.append(msg)
        return min(cands)

    if d == (3, 4, 5):
        return "R1.1", by
    if d == (3, 5, 5):
        return "R1.2", by
    if d == (4, 4, 5):
        light = [v for v in by[:2] if S[v].light4 is not None]
        if light:
            v1 = pick(light, "light")
            (v2,) = [v for v in by[:2] if v != v1]
            return "R1.3a", [v1, v2, by[2]]
        return "R1.3b", by
    if d == (4, 5, 5):
        bad = [v for v in by[1:] if S[v].bad5 is not None]
        if bad:
            v2 = pick(bad, "bad")
            (v3,) = [v for v in by[1:] if v != v2]
            return "R1.4a", [by[0], v2, v3]
        return "R1.4b", by
    if d == (5, 5, 5):
        bad = [v for v in by if S[v].bad5 is not None]
        if bad:
            v1 = pick(bad, "bad")
            return "R1.5a", [v1] + [v for v in by if v != v1]
        return "R1.5b", by
    return None


def _face_neighbours(face_verts: tuple[int, ...], i: int) -> tuple[int, int, int]:
    n = len(face_verts)
    return face_verts[i - 1], face_verts[(i + 1) % n], face_verts[(i + 2) % n]


def _r2_r3(G: PlaneGraph, S: StructureReport, fid: int, ledger: TransferLedger) -> None:
    verts = G.face(fid).vertices
    for i, v in enumerate(verts):
        a, b, _ = _face_neighbours(verts, i)
        dv, da, db = G.degree(v), G.degree(a), G.degree(b)
        dst = ("f", fid)
        if dv >= 5:
            rule = "R2.1" if da >= 4 and db >= 4 else "R2.2"
            ledger.add(("v", v), dst, FIXED_AMOUNT[rule], rule)
        elif dv == 4 and S[v].weak4 is None:
            if da == 3 and db == 3:
                corner = G.rotation_index(v, b)  # f is the face of the dart (v, b)
                opposite = G.face_of_dart(v, G.neighbors(v)[(corner + 2) % 4])
                rule = "R3.1.1" if G.face_degree(opposite) == 3 else "R3.1.2"
            elif da >= 4 and db >= 4:
                soft = any(G.degree(x) == 4 and S[x].soft4 is not None for x in (a, b))
                rule = "R3.2.1" if soft else "R3.2.2"
            else:
                rule = "R3.3"
            ledger.add(("v", v), dst, FIXED_AMOUNT[rule], rule)


def apply_rules(G: PlaneGraph) -> tuple[ChargeState, TransferLedger]:
    """Run R1 to R4 once over every matching element; returns final charges and the ledger."""
    rep = in_class(G)
    if not rep.in_class:
        c4, c, e = rep.violations[0]
        raise NotInClass(f"4-cycle {c4} shares edge {e} with cycle {c}")
    S = classify(G)
    state = initial_charge(G)
    ledger = TransferLedger()

    for f in G.faces:
        if not is_cycle_face(G, f.id):
            continue
        if f.degree == 3:
            got = _r1_roles(G, S, f.vertices, ledger.warnings)
            if got is None:
                msg = f"3-face on {sorted(f.vertices)} matches no R1 case"
                log.debug(msg)
                ledger.warnings.append(msg)
                continue
            rule, roles = got
            amounts = R1_SCHEDULE[rule]
            assert sum(amounts) == 4
            for v, amt in zip(roles, amounts):
                ledger.add(("v", v), ("f", f.id), amt, rule)
        elif f.degree == 4:
            _r2_r3(G, S, f.id, ledger)

    for u in G.vertices:
        if G.degree(u) < 4:
            continue
        for v in S.pendant3[u]:
            ledger.add(("v", u), ("v", v), FIXED_AMOUNT["R4.pendant"], "R4.pendant")
        for v in S.free3[u]:
            ledger.add(("v", u), ("v", v), FIXED_AMOUNT["R4.free"], "R4.free")

    for t in ledger:
        state.charge[t.src] -= t.amount
        state.charge[t.dst] += t.amount
    return state, ledger


# -- audit ------------------------------------------------------------------

@dataclass
class AuditReport:
    in_class: bool
    conserved: bool = False
    total: Fraction = Fraction(0)
    bound_violations: list[str] = field(default_factory=list)
    negatives: list[Element] = field(default_factory=list)
    configurations: int = 0
    proof_gap: bool = False
    final: ChargeState | None = None
    ledger: TransferLedger | None = None

    @property
    def verdict(self) -> str:
        if not self.in_class:
            return "NOT_IN_CLASS"
        if not self.conserved or self.bound_violations:
            return "FAIL"
        if self.proof_gap:
            return "PROOF_GAP"
        return "CONSISTENT"

    @property
    def ok(self) -> bool:
        return self.verdict == "CONSISTENT"

    def to_text(self) -> str:
        lines = []
        if self.ledger is not None:
            lines.extend(t.to_text() for t in self.ledger)
        if self.final is not None:
            for e, c in sorted(self.final.charge.items()):
                lines.append(f"charge {label(e)} {c.numerator}/{c.denominator}")
        if self.in_class:
            lines.append(f"total {self.total.numerator}/{self.total.denominator}")
            lines.append(f"negatives {len(self.negatives)}")
            lines.append(f"configurations {self.configurations}")
        lines.extend(f"bound violated: {b}" for b in self.bound_violations)
        if self.ledger is not None:
            lines.extend(f"warning: {w}" for w in self.ledger.warnings)
        lines.append(f"verdict {self.verdict}")
        return "\n".join(lines) + "\n"


def _check_bounds(G: PlaneGraph, ledger: TransferLedger) -> list[str]:
    out = []
    for t in ledger:
        if t.dst[0] != "f" or G.face_degree(t.dst[1]) != 3:
            continue
        d = G.degree(t.src[1])
        if d == 4 and t.amount > 1:
            out.append(f"{t.to_text()}: a 4-vertex sends more than 1 to a 3-face")
        if d >= 5:
            if t.amount not in BIG_TO_TRIANGLE:
                out.append(f"{t.to_text()}: amount outside the allowed set")
            elif t.amount == 3 and not any(G.degree(x) == 4 for x in G.face(t.dst[1]).vertices):
                out.append(f"{t.to_text()}: 3 sent to a 3-face with no 4-vertex")
    return out


def replay(G: PlaneGraph, ledger: TransferLedger) -> list[str]:
    """Cross-check each record against its rule's schedule and per-face R1 totals."""
    problems = []
    per_face: dict[Element, Fraction] = {}
    for t in ledger:
        if t.rule in FIXED_AMOUNT and t.amount != FIXED_AMOUNT[t.rule]:
            problems.append(f"{t.to_text()}: amount does not match the rule")
        if t.rule.startswith("R1"):
            if t.amount not in R1_SCHEDULE[t.rule]:
                problems.append(f"{t.to_text()}: amount does not match the rule")
            per_face[t.dst] = per_face.get(t.dst, Fraction(0)) + t.amount
        if t.rule.startswith("R4") and G.degree(t.dst[1]) != 3:
            problems.append(f"{t.to_text()}: R4 sink is not a 3-vertex")
    for f, amt in per_face.items():
        if amt != 4:
            problems.append(f"3-face {label(f)} receives {amt} under R1")
    return problems


def audit(G: PlaneGraph) -> AuditReport:
    from .reducibility import find_all

    rep = in_class(G)
    if not rep.in_class:
        return AuditReport(in_class=False)
    final, ledger = apply_rules(G)
    total = final.total()
    report = AuditReport(
        in_class=True,
        conserved=total == TOTAL,
        total=total,
        bound_violations=_check_bounds(G, ledger) + replay(G, ledger),
        negatives=final.negatives(),
        final=final,
        ledger=ledger,
    )
    report.configurations = len(find_all(G))
    if report.configurations == 0:
        report.proof_gap = True
        log.warning("PROOF_GAP: class member with no reducible configuration\n%s", G.to_text())
    return report
