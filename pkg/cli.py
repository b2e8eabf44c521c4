"""
Command-line interface for regtool: reg, homology, invariants, vd, verify, gen.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from errors import RegtoolError

SCHEMA_VERSION = 1


# -----------------------------------------------------------------------------
# Input / output helpers
# -----------------------------------------------------------------------------

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(args: argparse.Namespace) -> tuple[Any, Any]:
    """(hypergraph or None, complex) from the input file."""
    from complex import independence_complex, minimal_nonfaces, parse_facets
    from hypergraph import parse_hypergraph

    text = _read_text(args.file)
    if getattr(args, "facets", False):
        delta = parse_facets(text)
        return (None if delta.is_void else minimal_nonfaces(delta)), delta
    h = parse_hypergraph(text)
    return h, independence_complex(h)


def _char(args: argparse.Namespace) -> int:
    from config import get
    from models import FieldPrime

    value = args.char if getattr(args, "char", None) is not None else get("field.char", 2)
    return FieldPrime.of(int(value)).p


def _emit_json(payload: dict[str, Any]) -> None:
    from config import get

    print(json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=get("output.json_indent", 2)))


def _console():
    from rich.console import Console

    return Console()


def _family_params(args: argparse.Namespace) -> dict[str, Any]:
    keys = ("n", "s", "d", "m", "k", "prob", "index")
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


# -----------------------------------------------------------------------------
# Commands
# -----------------------------------------------------------------------------

def cmd_reg(args: argparse.Namespace) -> int:
    from config import get
    from regularity import compute_regularity

    _, delta = _load(args)
    p = _char(args)
    method = args.method or get("regularity.method", "auto")
    max_degree = args.max_degree if args.max_degree is not None else get("regularity.max_degree")
    report = compute_regularity(delta, p, method, max_degree)
    if args.json:
        _emit_json(report.to_dict())
        return 0
    from rich.panel import Panel
    from rich.table import Table
    from utils import format_set

    cert = report.certificate
    table = Table(title="Regularity")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("reg(R/I)", str(report.value) + (" (capped)" if report.capped else ""))
    table.add_row("reg(I)", "-" if report.reg_ideal is None else str(report.reg_ideal))
    table.add_row("method", report.method.value)
    table.add_row("field", f"GF({p})")
    where = "Δ[S]" if cert.kind.value == "subset" else "link σ"
    table.add_row("certificate", f"{cert.kind.value} {format_set(cert.vertices, delta.labels)}: "
                                 f"H̃_{cert.degree - 1}({where}) ≠ 0")
    _console().print(Panel(table, title="reg"))
    return 0


def cmd_homology(args: argparse.Namespace) -> int:
    from complex import f_vector
    from homology import reduced_betti

    _, delta = _load(args)
    p = _char(args)
    betti = reduced_betti(delta, p)
    if args.json:
        _emit_json({"betti": betti.to_dict(), "char": p, "f_vector": f_vector(delta)})
        return 0
    from rich.panel import Panel
    from rich.table import Table

    faces = f_vector(delta)
    table = Table(title=f"Reduced homology over GF({p})")
    table.add_column("i", justify="right", style="cyan")
    table.add_column("f_i", justify="right")
    table.add_column("dim H̃_i", justify="right", style="green")
    for i in range(-1, betti.top + 1):
        table.add_row(str(i), str(faces[i + 1]), str(betti[i]))
    _console().print(Panel(table, title="homology"))
    return 0


def _invariants_payload(h: Any, delta: Any) -> dict[str, Any]:
    from hypergraph import is_graph
    from invariants import (
        independence_number,
        induced_matching_number,
        matching_number,
        min_two_collage,
        min_weight_two_collage,
        minimax_matching_number,
        weak_packing_statistic,
        zeta_min,
        zeta_star_packing,
    )

    graph = is_graph(h)
    payload: dict[str, Any] = {
        "nu": matching_number(h),
        "nu_min": minimax_matching_number(h),
        "nu_ind": induced_matching_number(h),
        "collage_min": min_two_collage(h)[0] if h.edges else None,
        "collage_weight": min_weight_two_collage(h)[0] if h.edges else None,
        "zeta": zeta_star_packing(h)[0] if graph else None,
        "zeta_min": zeta_min(h)[0] if graph else None,
        "alpha": independence_number(h) if graph else None,
        "weak_packing": weak_packing_statistic(delta),
    }
    return payload


def cmd_invariants(args: argparse.Namespace) -> int:
    h, delta = _load(args)
    if h is None:
        raise RegtoolError("the void complex has no edge ideal")
    payload = _invariants_payload(h, delta)
    if args.json:
        _emit_json(payload)
        return 0
    from rich.panel import Panel
    from rich.table import Table

    table = Table(title="Invariants")
    table.add_column("Statistic", style="cyan")
    table.add_column("Value", justify="right", style="green")
    for key, value in payload.items():
        table.add_row(key, "-" if value is None else str(value))
    _console().print(Panel(table, title="invariants"))
    return 0


def cmd_vd(args: argparse.Namespace) -> int:
    from decomp import is_cohen_macaulay, is_sequentially_cm, is_vertex_decomposable

    _, delta = _load(args)
    p = _char(args)
    ok, cert = is_vertex_decomposable(delta)
    payload = {
        **cert.to_dict(),
        "scm": is_sequentially_cm(delta, p),
        "cm": is_cohen_macaulay(delta, p),
        "char": p,
    }
    if args.json:
        _emit_json(payload)
        return 0
    from rich.panel import Panel
    from rich.table import Table

    table = Table(title="Decomposability")
    table.add_column("Property", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("vertex-decomposable", "yes" if ok else "no")
    if ok:
        table.add_row("shedding order", " ".join(payload["shedding_order"]) or "(simplex)")
    else:
        table.add_row("stuck at facets", " ".join("{" + ",".join(f) + "}" for f in payload["witness"]))
    table.add_row(f"sequentially CM over GF({p})", "yes" if payload["scm"] else "no")
    table.add_row(f"Cohen-Macaulay over GF({p})", "yes" if payload["cm"] else "no")
    _console().print(Panel(table, title="vd"))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    from config import get
    from harness import run_sweep
    from models import FieldPrime

    if args.char is not None:
        chars = [FieldPrime.of(args.char).p]
    else:
        chars = [FieldPrime.of(int(c)).p for c in get("field.verify_chars", [2, 3])]
    checks = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else None
    workers = args.workers if args.workers is not None else int(get("verify.workers", 1))
    result = run_sweep(
        args.family,
        args.n if args.n is not None else int(get("verify.n", 7)),
        trials=args.trials if args.trials is not None else int(get("verify.trials", 20)),
        seed=args.seed if args.seed is not None else int(get("verify.seed", 0)),
        chars=chars,
        checks=checks,
        workers=workers,
        params={k: v for k, v in _family_params(args).items() if k != "n"},
    )
    document = result.to_dict()
    if args.out:
        from persistence import ReportStore

        ReportStore(args.out, indent=get("output.json_indent", 2)).save(document)
    if args.json:
        _emit_json(document)
        return 1 if result.failed else 0
    from rich.panel import Panel
    from rich.table import Table

    from utils import format_relation

    summary = Table(title=f"{args.family}: {result.summary['instances']} instance(s)")
    summary.add_column("Property", style="cyan")
    for status, style in (("pass", "green"), ("fail", "red"), ("skip", "yellow")):
        summary.add_column(status, justify="right", style=style)
    for prop, counts in result.summary["properties"].items():
        summary.add_row(prop, str(counts["pass"]), str(counts["fail"]), str(counts["skip"]))
    console = _console()
    console.print(Panel(summary, title="verify"))
    failing = [r for r in result.reports if r.status.value == "fail"]
    if failing:
        table = Table(title="Failures")
        for col in ("Instance", "Property", "GF", "Clause", "Observed"):
            table.add_column(col)
        for r in failing:
            head = r.headline()
            table.add_row(r.instance_id, r.property_id, str(r.field_char), head.label if head else "",
                          format_relation(head.left, head.op, head.right) if head else "")
        console.print(Panel(table, title="failures", style="red"))
    return 1 if result.failed else 0


def cmd_gen(args: argparse.Namespace) -> int:
    from hypergraph import generate_family, to_text

    h = generate_family(args.family, _family_params(args), args.seed)
    if args.json:
        _emit_json(h.to_dict())
    else:
        sys.stdout.write(to_text(h))
    return 0


# -----------------------------------------------------------------------------
# Parser
# -----------------------------------------------------------------------------

def _add_family_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=None, help="Size (vertices; sweep bound for verify)")
    p.add_argument("--s", type=int, default=None, help="Parameter s of the hs family")
    p.add_argument("--d", type=int, default=None, help="Edge size for random-uniform")
    p.add_argument("--m", type=int, default=None, help="Edge count for random-uniform")
    p.add_argument("--k", type=int, default=None, help="Copies (disjoint-cycles) or generators (random-complex)")
    p.add_argument("--prob", type=float, default=None, help="Edge probability for random-graph")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regtool", description="Regularity of square-free monomial ideals")
    parser.add_argument("--log-level", default=None, help="Logging level (default from config)")
    sub = parser.add_subparsers(dest="command", required=True)

    def input_command(name: str, help_text: str, run: Any, char: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="Edge list (or facet list with --facets); - for stdin")
        p.add_argument("--facets", action="store_true", help="Input lists facets of a complex")
        p.add_argument("--json", action="store_true", help="Output JSON")
        if char:
            p.add_argument("--char", type=int, default=None, help="Field characteristic (prime)")
        p.set_defaults(run=run)
        return p

    p_reg = input_command("reg", "Regularity of R/I with a certificate", cmd_reg)
    p_reg.add_argument("--method", choices=["auto", "subsets", "links", "vd"], default=None,
                       help="Engine (default from config)")
    p_reg.add_argument("--max-degree", type=int, default=None, help="Stop once this degree is certified")

    input_command("homology", "Reduced Betti numbers of the complex", cmd_homology)
    input_command("invariants", "Matching, collage and packing statistics", cmd_invariants, char=False)
    input_command("vd", "Vertex decomposability and (sequential) Cohen-Macaulayness", cmd_vd)

    p_verify = sub.add_parser("verify", help="Run property checks over a family")
    p_verify.add_argument("--family", required=True, help="Family id, e.g. random-graph, graphs, hs")
    p_verify.add_argument("--trials", type=int, default=None, help="Instances for random families")
    p_verify.add_argument("--seed", type=int, default=None, help="Master seed")
    p_verify.add_argument("--char", type=int, default=None, help="Single field characteristic")
    p_verify.add_argument("--checks", default=None, help="Comma-separated checks (default: all standard)")
    p_verify.add_argument("--workers", type=int, default=None, help="Processes (0 = one per core)")
    p_verify.add_argument("--out", default=None, help="Also save the JSON document here")
    p_verify.add_argument("--json", action="store_true", help="Output JSON")
    _add_family_params(p_verify)
    p_verify.set_defaults(run=cmd_verify)

    p_gen = sub.add_parser("gen", help="Print a family member as an edge list")
    p_gen.add_argument("family", help="Family id, e.g. hs, cycle, random-uniform")
    p_gen.add_argument("--seed", type=int, default=None, help="Seed for random families")
    p_gen.add_argument("--index", type=int, default=None, help="Index for exhaustive families")
    p_gen.add_argument("--json", action="store_true", help="Output JSON")
    _add_family_params(p_gen)
    p_gen.set_defaults(run=cmd_gen)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse argv and dispatch; 0 ok, 1 property failure, 2 usage or input error."""
    from config import get, load_config_file
    from utils import setup_logging

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    load_config_file()
    setup_logging(args.log_level or get("logging.level", "WARNING"), get("logging.file"))
    try:
        return args.run(args)
    except (RegtoolError, OSError, UnicodeDecodeError) as e:
        print(f"regtool: error: {e}", file=sys.stderr)
        return 2


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
