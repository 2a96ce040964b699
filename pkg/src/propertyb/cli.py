"""Command-line frontend.

Subcommands: construct, verify, export-cnf, bounds, lower, info.
Exit codes: 0 ok, 1 usage or input error, 2 verification found a proper
coloring, 3 budget exhausted (verdict Unknown), 4 generated/predicted edge
count mismatch.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import bounds as bd
from . import lowerbounds as lb
from . import recipes as rc
from .constructions import ConstructionError
from .hypergraph import BLUE, Hypergraph, HypergraphError, read_hg, write_hg
from .solver import SolveBudget, VerdictKind, decide, export_nae_cnf

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COLORABLE = 2
EXIT_BUDGET = 3
EXIT_COUNT_MISMATCH = 4


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="propertyb", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generate a hypergraph from a recipe")
    p.add_argument("-r", "--recipe", required=True, help="recipe expression, e.g. 'aht(fano)'")
    p.add_argument("-o", "--output", help="write the .hg file here")
    p.add_argument(
        "--count-only",
        action="store_true",
        help="stream edges and report counts without materializing",
    )

    p = sub.add_parser("verify", help="decide 2-colorability of a .hg file")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--budget-nodes", type=int, default=SolveBudget().max_nodes)
    p.add_argument("--budget-seconds", type=float, default=SolveBudget().max_seconds)
    p.add_argument("--exhaustive-cap", type=int, default=SolveBudget().exhaustive_vertex_cap)

    p = sub.add_parser("export-cnf", help="write the not-all-equal CNF for a .hg file")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("bounds", help="print the bound table")
    p.add_argument("--legacy", action="store_true", help="previously best-known table")
    p.add_argument("--tsv", action="store_true", help="tab-separated output")

    p = sub.add_parser("lower", help="print a lower-bound certificate")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--x-max", type=int, default=2000, help="scan cap for the minimax")
    p.add_argument("--tsv", action="store_true")

    p = sub.add_parser("info", help="summarize a .hg file")
    p.add_argument("-i", "--input", required=True)
    return parser


def _witness_text(witness: Sequence[int]) -> str:
    return "".join("B" if c == BLUE else "R" for c in witness)


def _cmd_construct(args: argparse.Namespace) -> int:
    try:
        recipe = rc.parse_recipe(args.recipe)
    except rc.RecipeError as exc:
        print(f"recipe error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = rc.print_recipe(recipe)
    prediction = bd.predicted_count(recipe)
    print(f"recipe: {text}")
    try:
        if args.count_only or not args.output:
            counted = rc.stream_count_recipe(recipe)
            uniformity, nv, edges = counted.uniformity, counted.num_vertices, counted.num_edges
        else:
            h = rc.build_recipe(recipe)
            uniformity, nv, edges = h.uniformity, h.num_vertices, h.num_edges
    except ConstructionError as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return EXIT_COUNT_MISMATCH
    print(f"uniformity: {uniformity}")
    print(f"vertices: {nv}")
    print(f"edges: {edges}")
    kind = "exact" if prediction.exact else "bound"
    print(f"predicted: {prediction.value} ({kind})")
    if prediction.exact and edges != prediction.value:
        print("count mismatch against the closed form", file=sys.stderr)
        return EXIT_COUNT_MISMATCH
    if not prediction.exact and edges > prediction.value:
        print("generated count exceeds the bound", file=sys.stderr)
        return EXIT_COUNT_MISMATCH
    if args.output and not args.count_only:
        write_hg(h, args.output, comment=text)
        print(f"wrote: {args.output}")
    return EXIT_OK


def _read(path: str) -> Hypergraph | None:
    try:
        return read_hg(path)
    except (OSError, HypergraphError) as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        return None


def _cmd_verify(args: argparse.Namespace) -> int:
    h = _read(args.input)
    if h is None:
        return EXIT_USAGE
    try:
        budget = SolveBudget(args.budget_nodes, args.budget_seconds, args.exhaustive_cap)
    except ValueError as exc:
        print(f"bad budget: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verdict = decide(h, budget)
    print(f"verdict: {verdict.kind.value}")
    print(f"engine: {verdict.stats.engine}")
    print(f"nodes: {verdict.stats.nodes}")
    print(f"seconds: {verdict.stats.elapsed:.3f}")
    if verdict.kind is VerdictKind.COLORABLE:
        assert verdict.witness is not None
        print(f"witness: {_witness_text(verdict.witness)}")
        return EXIT_COLORABLE
    if verdict.kind is VerdictKind.UNKNOWN:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_export_cnf(args: argparse.Namespace) -> int:
    h = _read(args.input)
    if h is None:
        return EXIT_USAGE
    with open(args.output, "w", encoding="ascii") as f:
        f.write(export_nae_cnf(h, comment=f"not-all-equal encoding of {args.input}"))
    print(f"wrote: {args.output}")
    return EXIT_OK


def _cmd_bounds(args: argparse.Namespace) -> int:
    table = bd.legacy_table() if args.legacy else bd.build_paper_table()
    sys.stdout.write(table.render_tsv() if args.tsv else table.render_text())
    return EXIT_OK


def _cmd_lower(args: argparse.Namespace) -> int:
    try:
        if args.n == 5:
            cert = lb.m5_certificate()
            goldberg = lb.goldberg_lower(5, args.x_max)
            cert.lines.insert(
                0,
                lb.CertificateLine(
                    "minimax baseline", "goldberg_lower(5)", str(goldberg.bound), True
                ),
            )
        else:
            cert = lb.goldberg_lower(args.n, args.x_max)
    except lb.LowerBoundError as exc:
        print(f"lower-bound error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(cert.render_tsv() if args.tsv else cert.render_text())
    return EXIT_OK if cert.valid else EXIT_USAGE


def _cmd_info(args: argparse.Namespace) -> int:
    h = _read(args.input)
    if h is None:
        return EXIT_USAGE
    deg = h.degrees()
    print(f"uniformity: {h.uniformity}")
    print(f"vertices: {h.num_vertices}")
    print(f"edges: {h.num_edges}")
    print(f"degree min/max: {min(deg)}/{max(deg)}")
    print(f"degree mean: {sum(deg) / len(deg):.3f}")
    print(f"isolated vertices: {sum(1 for d in deg if d == 0)}")
    return EXIT_OK


_HANDLERS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "export-cnf": _cmd_export_cnf,
    "bounds": _cmd_bounds,
    "lower": _cmd_lower,
    "info": _cmd_info,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return _HANDLERS[args.command](args)


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
