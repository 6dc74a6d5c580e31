"""Command-line interface.

Subcommands:

* ``build``       emit a graph of the family as JSON
* ``betti``       compute and print a Betti diagram (table, json or csv)
* ``verify``      run the engine-vs-oracle checks for one instance
* ``conjecture``  compare engine shapes against the conjectured support
* ``report``      write csv + text + json + png renderings into a directory

Exit codes: 0 success (including conjecture mismatches, which are findings,
not errors), 1 verification failure, 2 usage error, 3 compute-cap refusal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .graphs import Graph, ga_prime, generalized_andrasfai, remove_cycle_edges
from .hochster import (
    HOCHSTER_VERTEX_CAP,
    BettiDiagram,
    diagram_shape,
    hochster_betti,
    projective_dimension,
    regularity,
)
from .homology import FieldSpec
from .verify import conjecture_report, undeleted_check, verify_instance

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3

LONG_TIER_THRESHOLD = 16


class UsageError(Exception):
    pass


class CapError(Exception):
    pass


@dataclass
class RunConfig:
    """Validated knobs shared by the computing subcommands."""

    char: int = 2
    threads: int = 1
    fmt: str = "table"
    tier: str = "fast"
    out: str | None = None

    def __post_init__(self):
        FieldSpec(self.char)  # raises on a composite characteristic
        if self.threads < 1:
            raise UsageError("--threads must be positive")

    def require_tier(self, n: int) -> None:
        if n >= LONG_TIER_THRESHOLD and self.tier != "long":
            raise CapError(
                f"{n} vertices needs --tier long (2^{n} subsets; "
                f"the default tier stops at {LONG_TIER_THRESHOLD - 1})"
            )


def _default_threads() -> int:
    env = os.environ.get("BETTI_LAB_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _parse_cycle(text: str) -> list[int]:
    try:
        verts = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"--cycle must be a comma-separated vertex list, got {text!r}")
    if not verts:
        raise UsageError("--cycle given but empty")
    return verts


def _build_graph(args) -> Graph:
    t, k = args.t, args.k
    if t is None or k is None:
        raise UsageError("--t and --k are required")
    if args.variant == "prime":
        return ga_prime(t, k)
    if args.variant == "full":
        return generalized_andrasfai(t, k)
    g = generalized_andrasfai(t, k)
    if not args.cycle:
        raise UsageError("--variant minus-cycle needs --cycle \"v0,v1,...\"")
    cycle = _parse_cycle(args.cycle)
    try:
        return remove_cycle_edges(g, cycle)
    except ValueError as exc:
        raise UsageError(f"invalid cycle: {exc}")


def _load_graph(path: str) -> Graph:
    data = json.loads(Path(path).read_text())
    return Graph.from_edges(data["n"], [tuple(e) for e in data["edges"]],
                            data.get("labels"))


def _graph_for(args) -> Graph:
    if getattr(args, "graph", None):
        return _load_graph(args.graph)
    return _build_graph(args)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands -----------------------------------------------------------------


def cmd_build(args) -> int:
    g = _build_graph(args)
    data = g.to_json_dict()
    # keep each edge pair on one line
    body = json.dumps(data, separators=(",", ":"))
    _emit(body + "\n", args.out)
    return EXIT_OK


def _diagram_for(args, cfg: RunConfig) -> tuple[Graph, BettiDiagram]:
    g = _graph_for(args)
    cfg.require_tier(g.n)
    if g.n > HOCHSTER_VERTEX_CAP:
        raise CapError(f"{g.n} vertices exceeds the engine cap of {HOCHSTER_VERTEX_CAP}")
    return g, hochster_betti(g, cfg.char, threads=cfg.threads)


def cmd_betti(args) -> int:
    cfg = RunConfig(args.char, args.threads, args.format, args.tier, args.out)
    _, diagram = _diagram_for(args, cfg)
    if cfg.fmt == "json":
        _emit(_json_dumps(diagram.to_json_dict()), cfg.out)
    elif cfg.fmt == "csv":
        _emit(diagram.to_csv_text(), cfg.out)
    else:
        _emit(diagram.to_table_text() + diagram.summary_line() + "\n", cfg.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = RunConfig(args.char, args.threads, args.format, args.tier, args.out)
    if args.t is None or args.k is None:
        raise UsageError("--t and --k are required")
    if args.variant == "minus-cycle":
        raise UsageError("verify has oracles only for --variant prime or full")
    if args.variant == "full":
        results = undeleted_check(args.t, args.k, cfg.char, threads=cfg.threads)
    else:
        n = args.t * (args.k - 1) + 2
        cfg.require_tier(n)
        results = verify_instance(args.t, args.k, cfg.char, threads=cfg.threads)
    failed = [r for r in results if r.passed is False]
    if cfg.fmt == "json":
        from . import formulas as fm

        payload = {
            "t": args.t,
            "k": args.k,
            "variant": args.variant,
            "char": cfg.char,
            "checks": [r.to_dict() for r in results],
            "formulas": [rep.to_dict() for rep in fm.instance_reports(args.t, args.k)],
        }
        _emit(_json_dumps(payload), cfg.out)
    elif cfg.fmt == "csv":
        lines = ["name,status,details"]
        for r in results:
            detail = r.details.replace('"', "'")
            lines.append(f'{r.name},{r.status()},"{detail}"')
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        lines = [f"verify t={args.t} k={args.k} variant={args.variant} char={cfg.char}"]
        for r in results:
            lines.append(f"  {r.status():>4} {r.name}: {r.details}")
        graded = [r for r in results if r.passed is not None]
        lines.append(f"summary: {len(graded) - len(failed)}/{len(graded)} passed, "
                     f"{len(results) - len(graded)} informational")
        _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_VERIFY_FAIL if failed else EXIT_OK


def _parse_range(text: str) -> list[int]:
    """Accept '3', '3,4,5' and '3..5'; empty text means an empty range."""
    text = text.strip()
    if not text:
        return []
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def cmd_conjecture(args) -> int:
    cfg = RunConfig(args.char, args.threads, args.format, args.tier, args.out)
    try:
        ts = _parse_range(args.t or "")
        ks = _parse_range(args.k or "")
    except ValueError:
        raise UsageError("--t/--k take values like '3', '3,4' or '3..5'")
    rows = []
    for t in ts:
        for k in ks:
            n = t * (k - 1) + 2
            cfg.require_tier(n)
            rows.append(conjecture_report(t, k, cfg.char, threads=cfg.threads))
    if cfg.fmt == "json":
        _emit(_json_dumps(rows), cfg.out)
    elif cfg.fmt == "csv":
        lines = ["t,k,verdict,extra,missing"]
        for r in rows:
            extra = ";".join(f"{i}:{j}" for i, j in r.get("extra", []))
            missing = ";".join(f"{i}:{j}" for i, j in r.get("missing", []))
            lines.append(f"{r['t']},{r['k']},{r['verdict']},{extra},{missing}")
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        lines = [f"{'t':>3} {'k':>3} verdict"]
        for r in rows:
            detail = ""
            if r.get("extra"):
                detail += f" extra={r['extra']}"
            if r.get("missing"):
                detail += f" missing={r['missing']}"
            lines.append(f"{r['t']:>3} {r['k']:>3} {r['verdict']}{detail}")
        _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


def cmd_report(args) -> int:
    from . import render  # matplotlib import deferred to the one path that draws

    cfg = RunConfig(args.char, args.threads, "table", args.tier, None)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    g, diagram = _diagram_for(args, cfg)
    stem = f"betti_t{args.t}_k{args.k}_{args.variant}" if args.t else "betti_graph"

    (out_dir / "graph.json").write_text(_json_dumps(g.to_json_dict()))
    (out_dir / f"{stem}.csv").write_text(diagram.to_csv_text())
    (out_dir / f"{stem}.txt").write_text(diagram.to_table_text() + diagram.summary_line() + "\n")
    render.save_figure(render.betti_figure(diagram, title=stem), out_dir / f"{stem}.png")

    summary = {
        "n": g.n,
        "char": cfg.char,
        "edges": g.edge_count,
        "reg": None if diagram.is_zero() else regularity(diagram),
        "pd": None if diagram.is_zero() else projective_dimension(diagram),
        "entries": len(diagram.entries),
    }
    written = ["graph.json", f"{stem}.csv", f"{stem}.txt", f"{stem}.png"]
    if args.variant == "prime" and args.t is not None and args.k >= 3:
        results = verify_instance(args.t, args.k, cfg.char, threads=cfg.threads,
                                  diagram=diagram)
        summary["checks"] = [r.to_dict() for r in results]
        summary["failed_checks"] = [r.name for r in results if r.passed is False]
        conj = conjecture_report(args.t, args.k, cfg.char, diagram=diagram)
        summary["conjectured_shape"] = conj
        if conj["verdict"] != "not-applicable":
            from . import formulas as fm

            fig = render.shape_overlay_figure(
                diagram_shape(diagram), fm.conjecture_shape(args.t, args.k),
                title=f"{stem} vs conjectured shape")
            render.save_figure(fig, out_dir / f"{stem}_shape.png")
            written.append(f"{stem}_shape.png")
    summary["files"] = sorted(written + ["summary.json"])
    (out_dir / "summary.json").write_text(_json_dumps(summary))
    sys.stdout.write(f"wrote {len(summary['files'])} files to {out_dir}\n")
    return EXIT_OK


# -- parser -----------------------------------------------------------------------


def _add_instance_args(p, with_graph=False):
    p.add_argument("--t", type=int, default=None, help="first family parameter")
    p.add_argument("--k", type=int, default=None, help="second family parameter")
    p.add_argument("--variant", choices=["full", "prime", "minus-cycle"],
                   default="prime", help="plain graph, cycle-deleted, or custom deletion")
    p.add_argument("--cycle", default=None,
                   help="comma-separated Hamiltonian cycle for --variant minus-cycle")
    if with_graph:
        p.add_argument("--graph", default=None,
                       help="JSON graph file (as produced by build) instead of --t/--k")


def _add_run_args(p):
    p.add_argument("--char", type=int, default=2, help="prime field characteristic")
    p.add_argument("--threads", type=int, default=_default_threads(),
                   help="parallel workers (default: BETTI_LAB_THREADS or 1)")
    p.add_argument("--tier", choices=["fast", "long"], default="fast",
                   help="long unlocks runs with 16+ vertices")
    p.add_argument("--out", default=None, help="write output to this path")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bettilab",
        description="Exact Betti diagrams of edge ideals of the cycle-deleted "
                    "Generalized Andrasfai family")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit a graph as JSON")
    _add_instance_args(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("betti", help="compute a Betti diagram")
    _add_instance_args(p, with_graph=True)
    _add_run_args(p)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", help="engine-vs-oracle checks for one instance")
    _add_instance_args(p)
    _add_run_args(p)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="scan shapes against the conjectured support")
    p.add_argument("--t", default="", help="range: '3', '3,4' or '3..5'")
    p.add_argument("--k", default="", help="range: '3', '4,5' or '4..6'")
    _add_run_args(p)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("report", help="write csv/txt/json/png renderings to a directory")
    _add_instance_args(p, with_graph=True)
    p.add_argument("--char", type=int, default=2)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--tier", choices=["fast", "long"], default="fast")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_entry() -> None:
    sys.exit(main())
