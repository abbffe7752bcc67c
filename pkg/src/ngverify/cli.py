"""Command-line front end.

Subcommands::

    ngverify gen <familyspec> [--format graph6|dot|edgelist]
    ngverify invariants <input> [--format json|md]
    ngverify verify <claim-id>... | --all [--n-max K] [--m-max K] [--format json|csv|md]
    ngverify claims list [--family F] [--provenance P] [--format md|json]

``<input>`` is a family spec (``wheel:4``), graph6 text, a path to a graph6
or edge-list file, or ``-`` for standard input.  Exit codes: 0 success,
1 verification mismatch against the stored goldens, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr
from pathlib import Path
from typing import TextIO

from . import claims as claims_mod
from .families import parse_family_spec
from .graph import (
    Graph,
    GraphFormatError,
    decode_graph6,
    encode_graph6,
    parse_edge_list_text,
    to_dot,
    to_edge_list_text,
)
from .invariants import invariant_report

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ngverify", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="emit a family instance")
    gen.add_argument("spec", help="family spec, e.g. wheel:4 or armed_crown:3,4")
    gen.add_argument("--format", choices=("graph6", "dot", "edgelist"), default="graph6")
    gen.add_argument("--out", type=Path)

    inv = sub.add_parser("invariants", help="alpha, beta, nu of a graph and its complement")
    inv.add_argument("input", help="family spec, graph6 text, file path, or - for stdin")
    inv.add_argument(
        "--input-format",
        choices=("auto", "spec", "graph6", "edgelist"),
        default="auto",
    )
    inv.add_argument("--format", choices=("json", "md"), default="json")
    inv.add_argument("--out", type=Path)

    ver = sub.add_parser("verify", help="sweep claims against the exact oracle")
    ver.add_argument("claim_ids", nargs="*", metavar="CLAIM")
    ver.add_argument("--all", action="store_true", help="verify every registered claim")
    ver.add_argument("--n-max", type=int, default=9)
    ver.add_argument("--m-max", type=int, default=4)
    ver.add_argument("--format", choices=("json", "csv", "md"), default="md")
    ver.add_argument("--goldens", type=Path, help="directory of golden CSVs to compare with")
    ver.add_argument("--out", type=Path)

    cl = sub.add_parser("claims", help="inspect the claim registry")
    cl.add_argument("action", choices=("list",))
    cl.add_argument("--family")
    cl.add_argument("--provenance", choices=(claims_mod.THEOREM, claims_mod.PROOF))
    cl.add_argument("--format", choices=("md", "json"), default="md")
    return parser


def _looks_like_edge_list(text: str) -> bool:
    first = text.strip().splitlines()[0].split() if text.strip() else []
    return len(first) == 2 and all(tok.isdigit() for tok in first)


def _parse_graph_text(text: str, kind: str) -> Graph:
    if kind == "auto":
        kind = "edgelist" if _looks_like_edge_list(text) else "graph6"
    if kind == "edgelist":
        return parse_edge_list_text(text)
    return decode_graph6(text.strip())


def load_input(source: str, kind: str = "auto", stdin: TextIO | None = None) -> Graph:
    if source == "-":
        return _parse_graph_text((stdin or sys.stdin).read(), kind)
    if kind == "spec":
        return parse_family_spec(source).build()
    path = Path(source)
    if kind != "auto" or path.is_file():
        if path.is_file():
            try:
                text = path.read_text()
            except OSError as exc:
                raise UsageError(f"cannot read {source}: {exc}") from None
            return _parse_graph_text(text, kind)
        if kind == "edgelist":
            raise UsageError(f"cannot read {source}: no such file")
        return _parse_graph_text(source, kind)
    if ":" in source:
        return parse_family_spec(source).build()
    return decode_graph6(source)


def _invariants_markdown(report) -> str:
    d = report.to_dict()
    rows = [
        ("vertices", d["n"], d["n"]),
        ("edges", d["m"], d["m_c"]),
        ("alpha", d["alpha"], d["alpha_c"]),
        ("beta", d["beta"], d["beta_c"]),
        ("nu", d["nu"], d["nu_c"]),
        ("alpha witness", d["alpha_witness"], d["alpha_witness_c"]),
        ("nu witness", d["nu_witness"], d["nu_witness_c"]),
    ]
    lines = ["| invariant | G | complement |", "|---|---|---|"]
    lines += [f"| {name} | {g} | {c} |" for name, g, c in rows]
    lines += ["", f"beta sum = {d['ng_sum']}, beta product = {d['ng_product']}"]
    return "\n".join(lines) + "\n"


def _claims_markdown(items) -> str:
    lines = [
        "| id | family | provenance | domain | formulas |",
        "|---|---|---|---|---|",
    ]
    for c in items:
        formulas = "; ".join(f"{q} = {f.text}" for q, f in c.formulas.items())
        lines.append(
            f"| {c.id} | {c.family.value} | {c.provenance} | {c.domain_text} | {formulas} |"
        )
    return "\n".join(lines) + "\n"


def _cmd_gen(args, err) -> tuple[int, str]:
    g = parse_family_spec(args.spec).build()
    if args.format == "graph6":
        return EXIT_OK, encode_graph6(g) + "\n"
    if args.format == "dot":
        return EXIT_OK, to_dot(g)
    return EXIT_OK, to_edge_list_text(g)


def _cmd_invariants(args, err, stdin) -> tuple[int, str]:
    g = load_input(args.input, args.input_format, stdin)
    report = invariant_report(g)
    if args.format == "json":
        return EXIT_OK, json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    return EXIT_OK, _invariants_markdown(report)


def _cmd_verify(args, err) -> tuple[int, str]:
    if args.all and args.claim_ids:
        raise UsageError("give claim ids or --all, not both")
    if not args.all and not args.claim_ids:
        raise UsageError("verify needs at least one claim id or --all")
    if args.n_max < 1 or args.m_max < 1:
        raise UsageError("--n-max and --m-max must be positive")
    ids = [c.id for c in claims_mod.REGISTRY] if args.all else args.claim_ids
    for cid in ids:
        claims_mod.get_claim(cid)
    threads = claims_mod.sweep_threads()

    report = claims_mod.VerificationReport(())
    for cid in ids:
        ranges = claims_mod.default_ranges(cid, args.n_max, args.m_max)
        report = report.merge(claims_mod.sweep(cid, ranges, threads=threads))

    goldens = claims_mod.load_goldens(args.goldens)
    mismatches, uncovered = claims_mod.compare_with_goldens(report, goldens)
    for line in mismatches:
        print(f"golden mismatch: {line}", file=err)
    if uncovered:
        print(f"note: {len(uncovered)} row(s) outside golden coverage", file=err)

    if args.format == "json":
        text = report.to_json()
    elif args.format == "csv":
        text = report.to_csv()
    else:
        text = report.to_markdown()
    return (EXIT_MISMATCH if mismatches else EXIT_OK), text


def _cmd_claims(args, err) -> tuple[int, str]:
    items = claims_mod.list_claims(args.family, args.provenance)
    if args.format == "json":
        return EXIT_OK, json.dumps([c.to_dict() for c in items], indent=2) + "\n"
    return EXIT_OK, _claims_markdown(items)


def main(
    argv: list[str] | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
    stdin: TextIO | None = None,
) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        # argparse prints --help to stdout and exits 0; let that through.
        with redirect_stderr(err):
            args = build_parser().parse_args(argv)
        if args.command == "gen":
            code, text = _cmd_gen(args, err)
        elif args.command == "invariants":
            code, text = _cmd_invariants(args, err, stdin)
        elif args.command == "verify":
            code, text = _cmd_verify(args, err)
        else:
            code, text = _cmd_claims(args, err)
    except UsageError as exc:
        print(str(exc), file=err)
        return EXIT_USAGE
    except (GraphFormatError, ValueError, KeyError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"ngverify: error: {message}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    out_path = getattr(args, "out", None)
    if out_path is not None:
        try:
            out_path.write_text(text)
        except OSError as exc:
            print(f"ngverify: error: cannot write {out_path}: {exc}", file=err)
            return EXIT_USAGE
    else:
        out.write(text)
    return code


def run(argv: list[str], stdin_text: str | None = None) -> tuple[int, str, str]:
    """Run the CLI in-process and return ``(exit_code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    stdin = io.StringIO(stdin_text) if stdin_text is not None else None
    code = main(argv, out, err, stdin)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
