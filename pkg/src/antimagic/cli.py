"""Command line front-end: ``antimagic gen | label | verify``.

Exit codes: 0 ok, 1 verification failed, 2 input error, 3 construction failure.

Labeling file format, one line per edge in edge-id order, then a footer::

    <edge_id> <x> <y> <XY|YX> <label>
    # case <tag> verified <true|false>
"""

from __future__ import annotations

import argparse
import glob as globmod
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .construction import CaseTag, antimagic_orientation
from .errors import (
    AntimagicError,
    ConstructionFailed,
    EmptyGraph,
    GraphFormatError,
    Infeasible,
    NotBiregular,
    RetriesExhausted,
)
from .generate import GenSpec, gen_biregular
from .graph import BipartiteGraph, Labeling, Orientation, format_graph, read_graph
from .verify import VerifyReport, brute_force_oracle, verify_labeling

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CONSTRUCTION = 0, 1, 2, 3


@dataclass(frozen=True)
class RunSummary:
    case_tag: CaseTag
    edge_count: int
    x_min: int
    x_max: int
    y_min: int
    y_max: int
    verified: bool
    elapsed: float

    def line(self, name: str = "") -> str:
        head = f"{name}: " if name else ""
        return (
            f"{head}case {self.case_tag} edges {self.edge_count} "
            f"x_sums [{self.x_min}, {self.x_max}] y_sums [{self.y_min}, {self.y_max}] "
            f"verified {str(self.verified).lower()} time {self.elapsed:.3f}s"
        )


def format_labeling(
    graph: BipartiteGraph, orientation: Orientation, labeling: Labeling, tag: CaseTag, verified: bool
) -> str:
    out = []
    for e, (x, y) in enumerate(graph.edges):
        d = "XY" if orientation.x_to_y[e] else "YX"
        out.append(f"{e} {x} {y} {d} {labeling.labels[e]}")
    out.append(f"# case {tag} verified {str(verified).lower()}")
    return "\n".join(out) + "\n"


def parse_labeling(text: str, graph: BipartiteGraph) -> tuple[Orientation, Labeling]:
    """Read a labeling file written for ``graph``; lines must follow edge-id order."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(rows) != graph.edge_count:
        raise GraphFormatError(f"labeling has {len(rows)} edge lines, graph has {graph.edge_count} edges")
    dirs, labels = [], []
    for e, row in enumerate(rows):
        if len(row) != 5 or row[3] not in ("XY", "YX"):
            raise GraphFormatError(f"bad labeling line: {' '.join(row)!r}")
        try:
            eid, x, y, lab = int(row[0]), int(row[1]), int(row[2]), int(row[4])
        except ValueError:
            raise GraphFormatError(f"bad labeling line: {' '.join(row)!r}") from None
        if eid != e or (x, y) != graph.edges[e]:
            raise GraphFormatError(f"labeling line {e} is ({eid}: {x}, {y}), graph edge is {graph.edges[e]}")
        dirs.append(row[3] == "XY")
        labels.append(lab)
    return Orientation(tuple(dirs)), Labeling(tuple(labels))


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = GenSpec(args.x, args.y, args.s, args.t, seed=args.seed, max_retries=args.max_retries)
    try:
        graph = gen_biregular(spec, method=args.method)
    except (Infeasible, RetriesExhausted) as exc:
        _err(f"gen: {exc}")
        return EXIT_INPUT
    text = format_graph(graph)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _label_one(path: Path, out: Path | None, oracle_max_edges: int) -> int:
    t0 = time.perf_counter()
    try:
        graph = read_graph(path)
        orientation, labeling, tag, report = antimagic_orientation(graph)
    except OSError as exc:
        _err(f"{path}: {exc}")
        return EXIT_INPUT
    except (GraphFormatError, NotBiregular, EmptyGraph) as exc:
        _err(f"{path}: {type(exc).__name__}: {exc}")
        return EXIT_INPUT
    except ConstructionFailed as exc:
        _err(f"{path}: construction failed: {exc}")
        if exc.report is not None:
            _err(f"  x_sums {list(exc.report.sums.x_sums)}")
            _err(f"  y_sums {list(exc.report.sums.y_sums)}")
        return EXIT_CONSTRUCTION
    elapsed = time.perf_counter() - t0

    text = format_labeling(graph, orientation, labeling, tag, report.ok)
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)
    xs, ys = report.sums.x_sums, report.sums.y_sums
    summary = RunSummary(
        tag,
        graph.edge_count,
        min(xs, default=0),
        max(xs, default=0),
        min(ys, default=0),
        max(ys, default=0),
        report.ok,
        elapsed,
    )
    # keep stdout clean for the labeling when no output file was given
    stream = sys.stderr if out is None else sys.stdout
    print(summary.line(str(path)), file=stream)
    if graph.edge_count <= oracle_max_edges:
        res = brute_force_oracle(graph, max_edges=oracle_max_edges)
        found = "found" if res.witness is not None else "none"
        print(f"{path}: oracle witness {found} ({res.searched})", file=stream)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_label(args) -> int:
    if args.glob:
        paths = sorted(Path(p) for p in globmod.glob(args.glob))
        if not paths:
            _err(f"label: no files match {args.glob!r}")
            return EXIT_INPUT
        outdir = Path(args.output) if args.output else None
        if outdir is not None:
            outdir.mkdir(parents=True, exist_ok=True)
        code = EXIT_OK
        for p in paths:
            target = (outdir or p.parent) / (p.stem + ".labels")
            code = max(code, _label_one(p, target, args.oracle_max_edges))
        return code
    if not args.input:
        _err("label: --input or --glob is required")
        return EXIT_INPUT
    out = Path(args.output) if args.output else None
    return _label_one(Path(args.input), out, args.oracle_max_edges)


def cmd_verify(args) -> int:
    try:
        graph = read_graph(args.input)
        orientation, labeling = parse_labeling(Path(args.labeling).read_text(), graph)
    except OSError as exc:
        _err(f"verify: {exc}")
        return EXIT_INPUT
    except GraphFormatError as exc:
        _err(f"verify: {exc}")
        return EXIT_INPUT
    report: VerifyReport = verify_labeling(graph, orientation, labeling)
    if report.ok:
        print("verified true")
        return EXIT_OK
    print("verified false")
    if not report.bijection_ok:
        print("bijection: labels are not exactly 1..|E|")
    sums = {"x": report.sums.x_sums, "y": report.sums.y_sums}
    for a, b in report.collisions:
        print(f"collision {a[0]}{a[1]} {b[0]}{b[1]} sum {sums[a[0]][a[1]]}")
    return EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antimagic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random biregular bipartite graph")
    g.add_argument("--x", type=int, required=True, help="number of X vertices")
    g.add_argument("--y", type=int, required=True, help="number of Y vertices")
    g.add_argument("--s", type=int, required=True, help="degree of every X vertex")
    g.add_argument("--t", type=int, required=True, help="degree of every Y vertex")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-retries", type=int, default=200)
    g.add_argument("--method", choices=("auto", "rejection"), default="auto")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    lab = sub.add_parser("label", help="construct and verify an antimagic orientation")
    lab.add_argument("-i", "--input")
    lab.add_argument("-o", "--output", help="labeling file, or output directory with --glob")
    lab.add_argument("--glob", help="label every graph file matching this pattern")
    lab.add_argument("--oracle-max-edges", type=int, default=0, help="also run the exhaustive oracle up to this size")
    lab.set_defaults(func=cmd_label)

    v = sub.add_parser("verify", help="check a labeling file against a graph")
    v.add_argument("-i", "--input", required=True)
    v.add_argument("--labeling", required=True)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AntimagicError as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
