"""Command line interface.

Subcommands: betti, harmonic, barcode, essential, distance, stability,
ladder. Exit codes: 0 success, 1 usage or computation error, 2 filtration
parse error, 3 theorem hypothesis violation. Errors are reported as a JSON
object on stderr. The HARMONIC_PH_THREADS environment variable caps worker
threads (unset/1 = serial, 0 = one per CPU).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .errors import (
    DuplicateSimplex,
    HarmonicError,
    HypothesisViolated,
    NonMonotone,
    ParseError,
)
from .essential import essential_report
from .exact import betti as exact_betti
from .formats import (
    emit_barcode_json,
    emit_barcode_svg,
    format_float,
    parse_filtration,
)
from .harmonic import harmonic_basis
from .persistence import barcode, step_function_of_filtration, terminal_subspace
from .stability import (
    check_theorem_barcode,
    check_theorem_stable,
    check_theorem_stable_persistent,
    dist_filtration_functions,
    dist_persistent,
    ladder_angle,
)
from .subspaces import grassmann_distance, set_default_tol


class _CliParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(prog="harmonicph", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--tol", type=float, default=1e-9,
                        help="relative rank tolerance (default 1e-9)")
    parser.add_argument("--seed", type=int, default=0,
                        help="random seed for sampling (default 0)")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress warnings on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p_betti = sub.add_parser("betti", help="Betti numbers of the full complex")
    p_betti.add_argument("file")
    p_betti.add_argument("--p", type=int, default=None)

    p_harm = sub.add_parser("harmonic", help="harmonic basis of a sublevel complex")
    p_harm.add_argument("file")
    p_harm.add_argument("--p", type=int, required=True)
    p_harm.add_argument("--at", type=int, default=None,
                        help="filtration index (default: full complex)")

    p_bar = sub.add_parser("barcode", help="harmonic barcode with subspaces")
    p_bar.add_argument("file")
    p_bar.add_argument("--p", type=int, required=True)
    p_bar.add_argument("--json", dest="json_out", default=None,
                       help="write JSON to this path instead of stdout")
    p_bar.add_argument("--svg", dest="svg_out", default=None,
                       help="also write an SVG rendering to this path")

    p_ess = sub.add_parser("essential", help="essential simplices of one bar")
    p_ess.add_argument("file")
    p_ess.add_argument("--p", type=int, required=True)
    p_ess.add_argument("--bar", required=True,
                       help="birth,death e.g. 3,5 or 6,inf")

    p_dist = sub.add_parser("distance", help="distance between two filtrations")
    p_dist.add_argument("file_a")
    p_dist.add_argument("file_b")
    p_dist.add_argument("--p", type=int, required=True)
    p_dist.add_argument("--kind", choices=["step", "persistent", "barcode"],
                        default="step")
    p_dist.add_argument("--ell", type=float, default=None,
                        help="exponent (default 2 for step, 1 otherwise)")

    p_stab = sub.add_parser("stability", help="check a stability inequality")
    p_stab.add_argument("file_a")
    p_stab.add_argument("file_b")
    p_stab.add_argument("--p", type=int, required=True)
    p_stab.add_argument("--theorem", choices=["stable", "persistent", "barcode"],
                        required=True)

    p_lad = sub.add_parser("ladder", help="ladder-complex principal angle")
    p_lad.add_argument("--n", type=int, required=True)
    p_lad.add_argument("--m", type=int, required=True)
    return parser


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_filtration(fh.read())


def _parse_bar_arg(arg: str):
    parts = arg.split(",")
    if len(parts) != 2:
        raise _UsageError("--bar expects birth,death")
    s = int(parts[0])
    t = math.inf if parts[1].strip().lower() == "inf" else int(parts[1])
    return s, t


def _emit(obj, quiet: bool) -> None:
    print(json.dumps(obj, indent=2))


def _warnings_to_stderr(parsed, quiet: bool) -> None:
    if quiet:
        return
    for note in parsed.warnings:
        print(f"warning: {note}", file=sys.stderr)


def _cmd_betti(args) -> int:
    parsed = _load(args.file)
    _warnings_to_stderr(parsed, args.quiet)
    k = parsed.complex
    ps = [args.p] if args.p is not None else list(range(k.dim + 1))
    out = {}
    for p in ps:
        exact_dim = exact_betti(k, k, p)
        float_dim = harmonic_basis(k, k, p, args.tol).dim
        out[str(p)] = {"betti": exact_dim, "harmonic_dim": float_dim,
                       "agree": exact_dim == float_dim}
    _emit(out, args.quiet)
    return 0


def _cmd_harmonic(args) -> int:
    parsed = _load(args.file)
    _warnings_to_stderr(parsed, args.quiet)
    filt = parsed.filtration
    t = filt.n_steps if args.at is None else args.at
    sub = filt.complex_at(t)
    space = harmonic_basis(parsed.complex, sub, args.p, args.tol)
    out = {
        "p": args.p,
        "at": t,
        "dim": space.dim,
        "columns": [list(s) for s in parsed.complex.simplices(args.p)],
        "basis": [
            [format_float(float(c)) for c in col]
            for col in space.space.basis.T
        ],
    }
    _emit(out, args.quiet)
    return 0


def _bar_records(parsed, p: int, tol: float):
    filt = parsed.filtration
    records = []
    for hb in barcode(filt, p, tol):
        rec = {"bar": hb.bar, "initial": hb.initial.basis}
        if hb.bar.is_simple and hb.bar.is_finite:
            rec["terminal"] = terminal_subspace(filt, p, hb.bar, tol).basis
        if hb.bar.is_simple:
            report = essential_report(filt, p, hb.bar, tol)
            rec["essential"] = report.essential
            rec["content"] = report.content
        records.append(rec)
    return records


def _cmd_barcode(args) -> int:
    parsed = _load(args.file)
    _warnings_to_stderr(parsed, args.quiet)
    records = _bar_records(parsed, args.p, args.tol)
    text = emit_barcode_json(parsed.complex, args.p, records)
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.svg_out:
        bars = [rec["bar"] for rec in records]
        svg = emit_barcode_svg(bars, parsed.filtration.n_steps,
                               title=f"harmonic barcode p={args.p}")
        with open(args.svg_out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def _cmd_essential(args) -> int:
    parsed = _load(args.file)
    _warnings_to_stderr(parsed, args.quiet)
    s, t = _parse_bar_arg(args.bar)
    filt = parsed.filtration
    match = None
    for hb in barcode(filt, args.p, args.tol):
        if hb.bar.s == s and hb.bar.t == t:
            match = hb
            break
    if match is None:
        raise HarmonicError(f"no bar ({s}, {t}) in degree {args.p}")
    report = essential_report(filt, args.p, match.bar, args.tol)
    out = {
        "p": args.p,
        "s": s,
        "t": "inf" if math.isinf(t) else t,
        "multiplicity": match.bar.multiplicity,
        "harmonic_rep": [
            [list(sigma), format_float(float(c))]
            for sigma, c in zip(
                parsed.complex.simplices(args.p), report.harmonic_rep.coeffs
            )
        ],
        "essential": [list(sigma) for sigma in report.essential],
        "content": format_float(report.content),
    }
    _emit(out, args.quiet)
    return 0


def _cmd_distance(args) -> int:
    pa, pb = _load(args.file_a), _load(args.file_b)
    _warnings_to_stderr(pa, args.quiet)
    _warnings_to_stderr(pb, args.quiet)
    p = args.p
    if args.kind == "step":
        ell = 2.0 if args.ell is None else args.ell
        fa = step_function_of_filtration(pa.filtration, p, args.tol)
        fb = step_function_of_filtration(pb.filtration, p, args.tol)
        value = dist_filtration_functions(fa, fb, ell)
        rows = ["t,distance"]
        for b in sorted(set(fa.breakpoints + fb.breakpoints)):
            d = grassmann_distance(fa.value_at(b), fb.value_at(b))
            rows.append(f"{format_float(b)},{format_float(d)}")
    elif args.kind == "persistent":
        ell = 1.0 if args.ell is None else args.ell
        fa = step_function_of_filtration(pa.filtration, p, args.tol)
        fb = step_function_of_filtration(pb.filtration, p, args.tol)
        value = dist_persistent(fa, fb, ell, args.tol)
        rows = ["kind,value", f"persistent,{format_float(value)}"]
    else:
        report = check_theorem_barcode(pa.filtration, pb.filtration, p, args.tol)
        value = report.lhs
        rows = ["i,j,distance"]
        for i, j, d in report.detail["per_pair"]:
            rows.append(f"{i},{j},{format_float(d)}")
    print(format_float(value))
    for row in rows:
        print(row)
    return 0


def _cmd_stability(args) -> int:
    pa, pb = _load(args.file_a), _load(args.file_b)
    _warnings_to_stderr(pa, args.quiet)
    _warnings_to_stderr(pb, args.quiet)
    p = args.p
    if args.theorem == "barcode":
        report = check_theorem_barcode(pa.filtration, pb.filtration, p, args.tol)
    else:
        f, g = pa.admissible(), pb.admissible()
        if args.theorem == "stable":
            report = check_theorem_stable(pa.complex, f, g, p, args.tol)
        else:
            report = check_theorem_stable_persistent(pa.complex, f, g, p, args.tol)
    out = {
        "theorem": args.theorem,
        "lhs": format_float(report.lhs),
        "rhs": format_float(report.rhs),
        "slack": format_float(report.slack),
        "holds": report.holds,
    }
    if "intermediate" in report.detail:
        out["intermediate"] = format_float(report.detail["intermediate"])
    if "seminorm_sum" in report.detail:
        out["seminorm_sum"] = format_float(report.detail["seminorm_sum"])
    _emit(out, args.quiet)
    return 0


def _cmd_ladder(args) -> int:
    report = ladder_angle(args.n, args.m, args.tol)
    out = {
        "n": report.n,
        "m": report.m,
        "alpha": format_float(report.alpha),
        "angle": format_float(report.angle),
        "cos_measured": format_float(report.cos_measured),
        "cos_closed_form": format_float(report.cos_closed_form),
        "abs_diff": format_float(abs(report.cos_measured - report.cos_closed_form)),
    }
    _emit(out, args.quiet)
    return 0


_COMMANDS = {
    "betti": _cmd_betti,
    "harmonic": _cmd_harmonic,
    "barcode": _cmd_barcode,
    "essential": _cmd_essential,
    "distance": _cmd_distance,
    "stability": _cmd_stability,
    "ladder": _cmd_ladder,
}


def _error_json(kind: str, message: str) -> str:
    return json.dumps({"error": kind, "message": message})


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(_error_json("UsageError", str(exc)), file=sys.stderr)
        return 1
    try:
        if args.tol <= 0:
            raise _UsageError("--tol must be positive")
        set_default_tol(args.tol)
        return _COMMANDS[args.command](args)
    except (ParseError, DuplicateSimplex, NonMonotone) as exc:
        print(_error_json(type(exc).__name__, str(exc)), file=sys.stderr)
        return 2
    except HypothesisViolated as exc:
        print(_error_json("HypothesisViolated", str(exc)), file=sys.stderr)
        return 3
    except _UsageError as exc:
        print(_error_json("UsageError", str(exc)), file=sys.stderr)
        return 1
    except (HarmonicError, OSError, ValueError) as exc:
        print(_error_json(type(exc).__name__, str(exc)), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
