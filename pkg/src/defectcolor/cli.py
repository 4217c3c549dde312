"""Command-line front end: ``defectcolor <command> ...``.

Every command prints line-oriented text. Exit status is 0 on success,
1 when an assertion or check fails and 2 on input errors.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import coloring, discharging, structure
from .errors import Acyclic, DefectColorError, ParseError
from .plane_graph import PlaneGraph, read_graph
from .reducibility import KINDS, RecursionReport, find_all, find_first, recursive_color

EXPECT_PREFIX = "# expect "
SCAN_UNIVERSE = 9
DEFAULT_SEED = 1


# -- fixture expectations ----------------------------------------------------

def expectations(G: PlaneGraph) -> dict[str, str]:
    try:
        gir = str(structure.girth(G))
    except Acyclic:
        gir = "none"
    member = structure.in_class(G).in_class
    kinds = sorted({c.kind for c in find_all(G)}) if member else []
    return {"in_class": "yes" if member else "no", "girth": gir, "kinds": ",".join(kinds) or "-"}


def format_expect(exp: dict[str, str]) -> str:
    return EXPECT_PREFIX + " ".join(f"{k}={v}" for k, v in exp.items())


def read_expect(path: Path) -> dict[str, str] | None:
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        if line.startswith(EXPECT_PREFIX):
            out = {}
            for tok in line[len(EXPECT_PREFIX):].split():
                key, sep, val = tok.partition("=")
                if not sep:
                    raise ParseError(f"bad expectation {tok!r}", lineno, 1, str(path))
                out[key] = val
            return out
    return None


# -- commands ---------------------------------------------------------------

def cmd_faces(args) -> int:
    G = read_graph(args.graph)
    for f in G.faces:
        print(f"f {f.id} d={f.degree} " + " ".join(map(str, f.vertices)))
    return 0


def cmd_girth(args) -> int:
    G = read_graph(args.graph)
    try:
        print(structure.girth(G))
    except Acyclic:
        print("acyclic")
    return 0


def cmd_classify(args) -> int:
    print(structure.classify(read_graph(args.graph)).to_text(), end="")
    return 0


def cmd_check_class(args) -> int:
    rep = structure.in_class(read_graph(args.graph))
    print(rep.to_text(), end="")
    return 0 if rep.in_class else 1


def cmd_color(args) -> int:
    G = read_graph(args.graph)
    if args.lists:
        L = coloring.read_lists(args.lists)
    elif args.uniform:
        L = coloring.uniform_lists(G, args.uniform)
    else:
        raise SystemExit("color: give a lists file or --uniform k")
    missing = [v for v in G.vertices if v not in L]
    if missing:
        raise DefectColorError(f"no list for vertex {missing[0]}")
    if args.recursive:
        if args.defect != 1:
            raise SystemExit("color: --recursive needs --defect 1")
        pi = recursive_color(G, L)
    else:
        pi = coloring.solve(G, L, args.defect)
    if pi is None:
        print(f"no (L,{args.defect})-coloring")
        return 1
    res = coloring.check(G, L, pi, args.defect)
    print(coloring.format_coloring(pi), end="")
    print(f"check {'ok' if res.ok else 'FAILED'}")
    return 0 if res.ok else 1


def cmd_choosable(args) -> int:
    G = read_graph(args.graph)
    res = coloring.is_choosable(G, args.k, args.d, budget=args.budget)
    print(f"({args.k},{args.d})-choosable: {'yes' if res.choosable else 'no'}")
    print(f"list systems tried: {res.cases}")
    if res.witness is not None:
        print("witness lists:")
        print(coloring.format_lists(res.witness), end="")
    return 0


def cmd_find_config(args) -> int:
    G = read_graph(args.graph)
    kinds = tuple(args.kind) if args.kind else KINDS
    found = find_all(G, kinds) if args.all else [c for c in [find_first(G, kinds)] if c]
    for c in found:
        print(c.to_text())
    if not found:
        print("none")
    return 0


def cmd_discharge(args) -> int:
    rep = discharging.audit(read_graph(args.graph))
    print(rep.to_text(), end="")
    return 0 if rep.ok else 1


def cmd_verify_lemmas(args) -> int:
    from .reducibility.oracle import oracle_verify

    kinds = args.kind or list(KINDS)
    failed = 0
    start = time.perf_counter()
    for kind in kinds:
        for r in oracle_verify(kind, existence=args.existence, strict=False):
            print(r.to_text())
            for d in r.discrepancies[:3]:
                print(f"    {d}")
            failed += not r.ok
    print(f"templates failed: {failed}  total time {time.perf_counter() - start:.1f}s")
    return 1 if failed else 0


# -- scan -------------------------------------------------------------------

@dataclass
class ScanRow:
    name: str
    vertices: int = 0
    member: bool = False
    configs: int = 0
    verdict: str = "-"
    colored: int = 0
    trials: int = 0
    problems: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "ok" if not self.problems else "FAIL"
        return (f"{self.name:<36} n={self.vertices:<3} class={'yes' if self.member else 'no':<3} "
                f"configs={self.configs:<4} audit={self.verdict:<10} colored={self.colored}/{self.trials} {status}")


def scan_one(path: Path, seed: int, trials: int) -> ScanRow:
    row = ScanRow(path.stem)
    try:
        G = read_graph(path)
    except DefectColorError as exc:
        row.problems.append(f"{path.name}: {exc}")
        return row
    row.vertices = len(G)
    if discharging.initial_charge(G).total() != discharging.TOTAL:
        row.problems.append("initial charge does not total -20")
    exp = read_expect(path)
    got = expectations(G)
    if exp is not None and exp != got:
        row.problems.append(f"expectations differ: file {exp} computed {got}")
    structure.classify(G)
    row.member = got["in_class"] == "yes"
    if not row.member:
        return row
    row.configs = len(find_all(G))
    if not row.configs:
        row.problems.append("PROOF_GAP: no configuration in a class member")
    audit = discharging.audit(G)
    row.verdict = audit.verdict
    if not audit.ok:
        row.problems.append(f"audit verdict {audit.verdict}")
    rng = random.Random(f"{seed}:{path.stem}")
    for _ in range(trials):
        L = coloring.random_lists(G, 3, SCAN_UNIVERSE, rng)
        report = RecursionReport()
        row.trials += 1
        try:
            pi = recursive_color(G, L, report)
        except DefectColorError as exc:
            row.problems.append(f"recursive_color: {exc}")
            continue
        if report.anomalies:
            row.problems.append(report.anomalies[0].splitlines()[0])
        if not coloring.check(G, L, pi, 1):
            row.problems.append("recursive_color returned an invalid coloring")
            continue
        if coloring.solve(G, L, 1) is None:
            row.problems.append("solve found no coloring where recursion did")
            continue
        row.colored += 1
    return row


def cmd_scan(args) -> int:
    paths = sorted(Path(args.corpus).glob("*.rot"))
    if not paths:
        print(f"no .rot files in {args.corpus}", file=sys.stderr)
        return 2
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(scan_one, paths, [args.seed] * len(paths), [args.trials] * len(paths)))
    else:
        rows = [scan_one(p, args.seed, args.trials) for p in paths]
    bad = 0
    for row in rows:
        print(row.line())
        for p in row.problems[:5]:
            print(f"    {p}")
        bad += bool(row.problems)
    print(f"fixtures {len(rows)}  failed {bad}")
    return 1 if bad else 0


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="defectcolor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", type=Path, help="rotation file")
        sp.set_defaults(fn=fn)
        return sp

    graph_cmd("faces", cmd_faces, "list faces with their boundary walks")
    graph_cmd("girth", cmd_girth, "length of a shortest cycle")
    graph_cmd("classify", cmd_classify, "degree counters and vertex flags")
    graph_cmd("check-class", cmd_check_class, "test class membership (exit 1 if not a member)")

    sp = graph_cmd("color", cmd_color, "find an (L,d)-coloring")
    sp.add_argument("lists", nargs="?", type=Path, help="lists file, lines 'v: c1 c2 ...'")
    sp.add_argument("--uniform", type=int, metavar="K", help="use lists {1..K} everywhere")
    sp.add_argument("--defect", type=int, default=1, metavar="D")
    sp.add_argument("--recursive", action="store_true", help="use the configuration-driven recursion")

    sp = graph_cmd("choosable", cmd_choosable, "exhaustive (k,d)-choosability test")
    sp.add_argument("k", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("--budget", type=int, default=coloring.DEFAULT_BUDGET)

    sp = graph_cmd("find-config", cmd_find_config, "locate reducible configurations")
    sp.add_argument("--all", action="store_true", help="list every occurrence")
    sp.add_argument("--kind", action="append", choices=KINDS)

    graph_cmd("discharge", cmd_discharge, "apply the transfer rules and audit the result")

    sp = sub.add_parser("verify-lemmas", help="exhaustively check every configuration's extension")
    sp.add_argument("--kind", action="append", choices=KINDS)
    sp.add_argument("--existence", choices=("witness", "solve"), default="witness")
    sp.set_defaults(fn=cmd_verify_lemmas)

    sp = sub.add_parser("scan", help="run the whole pipeline over a corpus directory")
    sp.add_argument("corpus", type=Path)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(fn=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DefectColorError, OSError) as exc:
        where = getattr(args, "graph", None) or getattr(args, "corpus", "")
        print(f"error: {where}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
