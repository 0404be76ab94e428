"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .engine import EngineOptions, InvariantViolation, RunResult, run
from .oracle import classical_strong_gb, ideal_equal, is_strong_gb, normalize_gb
from .polyring import format_poly
from .reducer import ReduceOptions
from .sigspace import format_sig
from .systems import ProblemSpec, parse_system
from .textio import ParseError, parse_input
from .tracker import verify_tracking

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="siggb", description="Strong signature Gröbner bases over the integers.")
    p.add_argument("--algorithm", choices=("kk", "pl"), default="kk")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE")
    src.add_argument("--system", metavar="NAME:N", help="cyclic:N or katsura:N (katsura:N has N+1 variables)")
    for flag in ("cover", "super", "coprime", "chain", "f5", "modular", "tail"):
        p.add_argument(f"--no-{flag}", action="store_true")
    p.add_argument("--gpol-regular-only", action="store_true")
    p.add_argument("--track", action="store_true", help="carry module vectors; emit coordinates and syzygies")
    p.add_argument("--stats", action="store_true", help="print every counter, not just the summary triple")
    p.add_argument("--verify", action="store_true", help="check the result against the classical oracle")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", metavar="FILE")
    return p


def _load(args) -> ProblemSpec:
    if args.system:
        try:
            return parse_system(args.system)
        except ValueError as e:
            raise _InputError(str(e)) from None
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise _InputError(f"{args.input}: {e.strerror}") from None
    try:
        return parse_input(text)
    except ParseError as e:
        raise _InputError(f"{args.input}: {e}") from None


def options_from_args(args) -> EngineOptions:
    return EngineOptions(
        algorithm=args.algorithm,
        cover=not args.no_cover,
        super_discard=not args.no_super,
        coprime=not args.no_coprime,
        chain=not args.no_chain,
        f5=not args.no_f5,
        gpol_regular_only=args.gpol_regular_only,
        reduce=ReduceOptions(tail=not args.no_tail, modular=not args.no_modular),
        tracking=args.track,
    )


def _verify(spec: ProblemSpec, result: RunResult) -> Optional[str]:
    polys = result.polys
    if not is_strong_gb(polys):
        return "engine output is not a strong Gröbner basis"
    if not ideal_equal(polys, classical_strong_gb(spec.generators)):
        return "engine output and oracle generate different ideals"
    if result.tracking and not verify_tracking(result.basis, result.syzygy_history, spec.generators, result.order):
        return "tracked module vectors do not replay"
    return None


def _vector_strings(v) -> list[str]:
    return [format_poly(p) for p in v]


def report(spec: ProblemSpec, result: RunResult, full_stats: bool) -> dict:
    ring = spec.ring
    st = result.stats
    stats = st.counters() if full_stats else {}
    stats["triple"] = "{}/{}/{}".format(*st.triple())
    out = {
        "basis": [format_poly(g) for g in normalize_gb(result.polys)],
        "syzygy_signatures": [format_sig(s, ring) for s in result.bank.signatures()],
        "stats": stats,
    }
    if result.tracking:
        out["signature_basis"] = [
            {"signature": format_sig(g.sig, ring), "poly": format_poly(g.poly)} for g in result.basis
        ]
        out["coordinates"] = [_vector_strings(g.vector) for g in result.basis]
        out["syzygies"] = [_vector_strings(z.vector) for z in result.bank]
    return out


def render_text(rep: dict) -> str:
    lines = ["# basis", *rep["basis"], "# syzygy signatures", *rep["syzygy_signatures"], "# stats"]
    lines.append(f"pairs/reduced/to-zero: {rep['stats']['triple']}")
    lines += [f"{k}: {v}" for k, v in rep["stats"].items() if k != "triple"]
    if "coordinates" in rep:
        lines.append("# coordinates")
        for row, g in zip(rep["coordinates"], rep["signature_basis"]):
            lines.append(f"{g['signature']} | {g['poly']} = [{', '.join(row)}]")
        lines.append("# syzygies")
        lines += ["[" + ", ".join(z) + "]" for z in rep["syzygies"]]
    return "\n".join(lines) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = _load(args)
    except _InputError as e:
        print(f"siggb: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        result = run(spec.generators, options_from_args(args), spec.module_order)
        problem = _verify(spec, result) if args.verify else None
    except (InvariantViolation, AssertionError, ArithmeticError) as e:
        print(f"siggb: internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    rep = report(spec, result, args.stats)
    text = json.dumps(rep, sort_keys=True, indent=2) + "\n" if args.format == "json" else render_text(rep)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if problem:
        print(f"siggb: verification failed: {problem}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.verify:
        print("siggb: verified against the classical oracle", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
