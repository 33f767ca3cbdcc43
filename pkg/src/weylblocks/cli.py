"""Command-line entry point: ``weylblocks VERB ...``.

Exit codes: 0 success, 1 a mathematical failure in the pipeline,
2 bad input (unreadable or invalid algebra file, bad arguments).
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra_io import AlgebraFileError, algebra_to_dict, resolve_algebra
from .exactmath import Polynomial
from .liealg import LieAlgebraError, NotNilpotent, NotSemisimple, cached_adjoint
from .pipeline import align, reference_invariants, run_pipeline, scoped_algebra
from .report import InvariantReport
from .series import expand_series, hilbert_series_from_degrees, molien_coefficients_su2
from .solver import InconsistentInvariant, NotInSpan
from .torus import weights_from_cartan
from .verification import run_checks
from .weyl import ClosureBoundExceeded

MATH_ERRORS = (NotSemisimple, NotNilpotent, NotInSpan, ClosureBoundExceeded, InconsistentInvariant, ArithmeticError)
INPUT_ERRORS = (AlgebraFileError, LieAlgebraError, KeyError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _csv_ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weylblocks", description="Polynomial invariants of Lie group adjoint actions.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def algebra_args(sp, formats=("text", "json", "latex")):
        sp.add_argument("algebra", help="built-in name (sl2, sl3) or path to an algebra JSON file")
        sp.add_argument("--embedding", help="restrict to a subgroup listed in the algebra's embeddings")
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--output", help="write to this file instead of stdout")

    sp = sub.add_parser("show", help="basis, brackets, Cartan metric and weights")
    algebra_args(sp, ("text", "json"))

    for verb, helptext in (("invariants", "run the full invariant construction"),
                           ("syzygies", "invariants plus relations among them")):
        sp = sub.add_parser(verb, help=helptext)
        algebra_args(sp)
        sp.add_argument("--max-degree", type=_nonneg, help="largest block degree (default: top Hilbert-basis degree)")
        sp.add_argument("--degree-cap", type=_nonneg, default=3, help="degree cap for the torus Hilbert basis")
        sp.add_argument("--closure-reynolds", action="store_true",
                        help="sum over the whole generated group instead of the listed words")
        sp.add_argument("--syzygy-cap", type=_nonneg, help="search relations up to this weighted degree")
        if verb == "invariants":
            sp.add_argument("--syzygies", action="store_true", help="append syzygies (cap: twice the max degree)")
        sp.add_argument("--series", type=_nonneg, metavar="N",
                        help="append Molien coefficients through degree N (rank-one torus only)")
        sp.add_argument("--timing", action="store_true", help="include stage timings (breaks byte-determinism)")

    for verb in ("molien", "hilbert"):
        sp = sub.add_parser(verb, help="series coefficient tables; compares both sides when both are given")
        sp.add_argument("--weights", type=_csv_ints, help="torus z-exponents, e.g. --weights=-2,2,0")
        sp.add_argument("--primaries", type=_csv_ints, help="primary invariant degrees")
        sp.add_argument("--secondaries", type=_csv_ints, default=[], help="secondary invariant degrees")
        sp.add_argument("--max-degree", type=_nonneg, default=20)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--output")

    sp = sub.add_parser("verify", help="recompute the built-in sl(3) results and compare")
    sp.add_argument("--output")
    return p


# ---------------------------------------------------------------------------
# verbs


def cmd_show(args) -> tuple[str, int]:
    g, embeddings = resolve_algebra(args.algebra)
    g, _gens, _scope, _emb = scoped_algebra(g, embeddings, args.embedding)
    ad = cached_adjoint(g)
    weights = weights_from_cartan(g).weights
    chi = [[str(x) for x in row] for row in ad.chi.rows]
    if args.format == "json":
        # a loadable algebra file; the extra keys are ignored on input
        data = algebra_to_dict(g, [] if args.embedding else [embeddings[k] for k in sorted(embeddings)])
        data["cartan_metric"] = chi
        data["weights"] = {v: list(w) for v, w in zip(g.labels, weights)}
        return json.dumps(data, sort_keys=True, indent=2) + "\n", 0
    lines = [f"algebra {g.name}, dimension {g.dim}", f"basis: {', '.join(g.labels)}",
             f"Cartan subalgebra: {', '.join(g.labels[i] for i in g.cartan)}",
             "triples (x, y, h): " + "; ".join("(" + ", ".join(g.labels[i] for i in t) + ")" for t in g.triples),
             "brackets:"]
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            v = g.bracket(g.basis_vector(i), g.basis_vector(j))
            if any(v):
                lines.append(f"  [{g.labels[i]}, {g.labels[j]}] = {Polynomial.linear(g.labels, v)}")
    lines.append("Cartan metric:")
    width = max(len(x) for row in chi for x in row)
    for lab, row in zip(g.labels, chi):
        lines.append(f"  {lab:>4} " + " ".join(x.rjust(width) for x in row))
    lines.append("weights:")
    for lab, w in zip(g.labels, weights):
        lines.append(f"  {lab:>4} {tuple(w)}")
    if embeddings and args.embedding is None:
        lines.append(f"embeddings: {', '.join(sorted(embeddings))}")
    return "\n".join(lines) + "\n", 0


def _pipeline_report(args, syzygy_cap) -> InvariantReport:
    g, embeddings = resolve_algebra(args.algebra)
    alg, gens, scope, _emb = scoped_algebra(g, embeddings, args.embedding)
    result = run_pipeline(alg, gens, scope, max_degree=args.max_degree, degree_cap=args.degree_cap,
                          closure=args.closure_reynolds, syzygy_cap=syzygy_cap, series_degree=args.series)
    known = reference_invariants(alg, scope)
    if known is not None:
        result.alignment = align(result, known)
    return InvariantReport.from_result(result, include_timing=args.timing)


def _render(report: InvariantReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "latex":
        return report.to_latex()
    return report.to_text()


def cmd_invariants(args) -> tuple[str, int]:
    cap = args.syzygy_cap
    if cap is None and args.syzygies:
        cap = 2 * (args.max_degree if args.max_degree is not None else args.degree_cap)
    return _render(_pipeline_report(args, cap), args.format), 0


def cmd_syzygies(args) -> tuple[str, int]:
    cap = args.syzygy_cap
    if cap is None:
        cap = 2 * (args.max_degree if args.max_degree is not None else args.degree_cap)
    return _render(_pipeline_report(args, cap), args.format), 0


def cmd_series(args) -> tuple[str, int]:
    n = args.max_degree
    if args.verb == "molien" and args.weights is None:
        raise UsageError("molien needs --weights")
    if args.verb == "hilbert" and args.primaries is None:
        raise UsageError("hilbert needs --primaries")
    out: dict = {"max_degree": n}
    if args.weights is not None:
        out["molien"] = molien_coefficients_su2(args.weights, n)
    if args.primaries is not None:
        if any(d < 1 for d in args.primaries + args.secondaries):
            raise UsageError("invariant degrees must be positive")
        form = hilbert_series_from_degrees(args.primaries, args.secondaries)
        out["hilbert"] = expand_series(form, n)
        out["hilbert_form"] = str(form)
    if "molien" in out and "hilbert" in out:
        out["agree"] = [a == b for a, b in zip(out["molien"], out["hilbert"])]
    if args.format == "json":
        return json.dumps(out, sort_keys=True, indent=2) + "\n", 0
    lines = []
    if "hilbert_form" in out:
        lines.append(f"H(q) = {out['hilbert_form']}")
    cols = [k for k in ("molien", "hilbert") if k in out]
    lines.append("  n  " + "  ".join(c.rjust(10) for c in cols) + ("  agree" if "agree" in out else ""))
    for i in range(n + 1):
        row = f"{i:>3}  " + "  ".join(str(out[c][i]).rjust(10) for c in cols)
        if "agree" in out:
            row += "  " + ("yes" if out["agree"][i] else "NO")
        lines.append(row)
    if "agree" in out:
        lines.append("all degrees agree" if all(out["agree"]) else "MISMATCH")
    return "\n".join(lines) + "\n", 0


def cmd_verify(args) -> tuple[str, int]:
    checks = run_checks()
    failed = sum(not c.ok for c in checks)
    lines = [c.line() for c in checks]
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", 0 if failed == 0 else 1


COMMANDS = {
    "show": cmd_show,
    "invariants": cmd_invariants,
    "syzygies": cmd_syzygies,
    "molien": cmd_series,
    "hilbert": cmd_series,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text, code = COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"weylblocks: error: {exc}", file=sys.stderr)
        return 2
    except INPUT_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"weylblocks: input error: {msg}", file=sys.stderr)
        return 2
    except MATH_ERRORS as exc:
        print(f"weylblocks: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
