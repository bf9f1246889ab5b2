"""Command line interface.

Subcommands: check (characteristic-number sieve), analyze (certificate
report for one bundle), sweep (parameter grid to CSV), pullback (finite
cover aggregation against upstairs certificates).

Exit codes: 0 success; 1 validation failure, oversized grid, or
inconsistent exact inputs; 2 unreadable or malformed input; 3 exact
arithmetic produced a non-integer where an integer is required.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from fractions import Fraction
from typing import IO

from .errors import (
    GridTooLargeError,
    NonIntegerResultError,
    ParseError,
    ValidationFailedError,
    WindowExceededError,
)
from .exactnum import rat_str
from .inputs import InputDoc, load_input
from .nonvanishing import AnalyzeConfig, analyze
from .pullback import aggregate_h1, delta_of, pullback_invariants
from .reporting import SCHEMA_VERSION, report_to_json, report_to_text
from .sweep import DEFAULT_CAP, SweepSpec, run_sweep, summarize, write_csv
from .threefold import PicardMode, VanishingMode, validate

ENV_CAP = "NONVANISH_CAP"


def _parse_window(raw: str) -> tuple[int, int]:
    lo_s, sep, hi_s = raw.partition("..")
    if not sep:
        raise ParseError(f"expected LO..HI, got {raw!r}")
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise ParseError(f"expected LO..HI, got {raw!r}") from None
    if lo > hi:
        raise ParseError(f"empty window {raw!r}")
    return lo, hi


def _apply_mode_overrides(doc: InputDoc, args) -> InputDoc:
    X = doc.threefold
    if X is None:
        return doc
    if getattr(args, "picard", None):
        X = dataclasses.replace(X, picard_mode=PicardMode(args.picard))
    if getattr(args, "vanishing_mode", None):
        X = dataclasses.replace(X, vanishing_mode=VanishingMode(args.vanishing_mode))
    return dataclasses.replace(doc, threefold=X)


def _open_out(path: str | None):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _emit(text: str, path: str | None) -> None:
    stream, owned = _open_out(path)
    try:
        stream.write(text)
    finally:
        if owned:
            stream.close()


def cmd_check(args) -> int:
    doc = _apply_mode_overrides(load_input(args.input), args)
    X = doc.threefold
    if X is None:
        raise ParseError("check needs a [threefold] section")
    report = validate(X.d, X.epsilon, X.tau)
    if args.format == "structured":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "threefold": {
                "d": X.d,
                "epsilon": X.epsilon,
                "tau": X.tau,
                "picard_mode": X.picard_mode.value,
                "vanishing_mode": X.vanishing_mode.value,
            },
            "ok": report.ok,
            "violations": [
                {"rule": rule, "message": message}
                for rule, message in report.violations
            ],
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        lines = [f"d={X.d} epsilon={X.epsilon} tau={X.tau}: "
                 + ("ok" if report.ok else "FAILED")]
        for rule, message in report.violations:
            lines.append(f"  {rule}: {message}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.ok else 1


def cmd_analyze(args) -> int:
    doc = _apply_mode_overrides(load_input(args.input), args)
    if doc.threefold is None or doc.bundle is None:
        raise ParseError("analyze needs [threefold] and [bundle] sections")
    chi_window = _parse_window(args.chi_window) if args.chi_window else None
    report = analyze(
        doc.threefold,
        doc.bundle,
        AnalyzeConfig(label=doc.label, chi_window=chi_window),
    )
    if args.format == "structured":
        _emit(report_to_json(report), args.out)
    else:
        _emit(report_to_text(report), args.out)
    return 0


def _resolve_cap(flag_value: int | None, file_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(ENV_CAP)
    if env is not None and env.strip():
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"{ENV_CAP} must be an integer, got {env!r}") from None
    if file_value is not None:
        return file_value
    return DEFAULT_CAP


def cmd_sweep(args) -> int:
    doc = load_input(args.input)
    if doc.sweep is None:
        raise ParseError("sweep needs a [sweep] section")
    sw = doc.sweep
    spec = SweepSpec(
        threefolds=sw.threefolds,
        c1_values=sw.c1_values,
        c2_range=sw.c2_range,
        alpha_range=sw.alpha_range,
        cap=_resolve_cap(args.cap, sw.cap),
    )
    rows = run_sweep(spec, jobs=args.jobs)
    out_path = args.out or sw.out
    if out_path is None:
        write_csv(rows, sys.stdout)
        return 0
    with open(out_path, "w", encoding="utf-8", newline="") as handle:
        write_csv(rows, handle)
    summary = summarize(rows)
    if args.format == "structured":
        print(json.dumps(summary, sort_keys=True, indent=2))
    else:
        parts = [f"rows: {summary['rows']}", f"invalid: {summary['invalid']}",
                 f"split: {summary['split']}", f"certified: {summary['certified']}"]
        if summary["regimes"]:
            parts.append("regimes: " + " ".join(
                f"{k}={v}" for k, v in summary["regimes"].items()))
        if summary["theorems"]:
            parts.append("theorems: " + " ".join(
                f"{k}={v}" for k, v in summary["theorems"].items()))
        parts.append(f"csv: {out_path}")
        print("\n".join(parts))
    return 0


def cmd_pullback(args) -> int:
    doc = _apply_mode_overrides(load_input(args.input), args)
    if doc.pullback is None:
        raise ParseError("pullback needs a [pullback] section")
    pb = doc.pullback
    E = pb.data
    F = pullback_invariants(pb.degree, E.invariants)
    notes: list[str] = []
    cert_by_n: dict[int, tuple[str, Fraction]] = {}
    report = None
    if doc.threefold is not None:
        X = doc.threefold
        if X.d != pb.degree:
            raise ParseError(
                f"[threefold] degree {X.d} does not match cover degree {pb.degree}"
            )
        report = analyze(X, F, AnalyzeConfig(label=doc.label))
        cert_by_n = {
            c.n: (c.theorem.value, c.lower_bound) for c in report.certificates
        }
    rows = []
    inconsistent = False
    if E.window is not None:
        lo, hi = E.window
        for n in range(lo + pb.degree - 1, hi + 1):
            agg = aggregate_h1(pb.degree, E, n)
            cert = cert_by_n.get(n)
            if E.exact and cert is not None and cert[1] > agg:
                inconsistent = True
            rows.append((n, agg, cert))
        if not rows:
            notes.append(
                f"h1 window {lo}..{hi} is shorter than the cover degree; "
                "no twist aggregates completely"
            )
    else:
        notes.append("no h1 window supplied; aggregation skipped")
    uncovered = [n for n, agg, cert in rows if agg > 0 and cert is None]
    if uncovered and report is not None:
        notes.append(
            "nonzero aggregate beyond the certified range at n = "
            + ", ".join(str(n) for n in uncovered)
        )
    if inconsistent:
        notes.append(
            "INCONSISTENT: a certificate exceeds an exact aggregate; "
            "the downstairs table and upstairs invariants cannot both be right"
        )

    if args.format == "structured":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "degree": pb.degree,
            "downstairs": {
                "c1": E.invariants.c1,
                "c2": E.invariants.c2,
                "alpha": E.invariants.alpha,
                "delta": delta_of(1, E.invariants),
                "window": None if E.window is None else list(E.window),
                "exact": E.exact,
            },
            "upstairs": {
                "c1": F.c1, "c2": F.c2, "alpha": F.alpha,
                "delta": delta_of(pb.degree, F),
            },
            "rows": [
                {
                    "n": n,
                    "aggregate": agg,
                    "certificate": None if cert is None else rat_str(cert[1]),
                    "theorem": None if cert is None else cert[0],
                }
                for n, agg, cert in rows
            ],
            "notes": notes,
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        rel = "=" if E.exact else ">="
        lines = [
            f"cover degree {pb.degree}: downstairs c1={E.invariants.c1} "
            f"c2={E.invariants.c2} alpha={E.invariants.alpha} "
            f"(delta={delta_of(1, E.invariants)})",
            f"pulled back: c1={F.c1} c2={F.c2} alpha={F.alpha} "
            f"(delta={delta_of(pb.degree, F)})",
        ]
        for n, agg, cert in rows:
            line = f"  n={n}  aggregate h1 {rel} {agg}"
            if cert is not None:
                line += f"  certificate >= {rat_str(cert[1])} [{cert[0]}]"
            elif agg > 0 and report is not None:
                line += "  (beyond certified range)"
            lines.append(line)
        for note in notes:
            lines.append(f"note: {note}")
        _emit("\n".join(lines) + "\n", args.out)
    return 1 if inconsistent else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonvanish",
        description="exact non-vanishing certificates for twists of rank-2 "
        "bundles on polarized threefolds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, modes=True):
        p.add_argument("input", help="key-value input file")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--out", metavar="PATH", default=None)
        if modes:
            p.add_argument("--picard", choices=("z", "num-z"), default=None)
            p.add_argument(
                "--vanishing-mode", dest="vanishing_mode",
                choices=("c2", "c4"), default=None,
            )

    p_check = sub.add_parser("check", help="run the characteristic-number sieve")
    common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_analyze = sub.add_parser("analyze", help="emit non-vanishing certificates")
    common(p_analyze)
    p_analyze.add_argument(
        "--chi-window", metavar="LO..HI", default=None,
        help="also tabulate exact chi values on this twist window",
    )
    p_analyze.set_defaults(func=cmd_analyze)

    p_sweep = sub.add_parser("sweep", help="analyze a parameter grid, CSV out")
    common(p_sweep, modes=False)
    p_sweep.add_argument("--cap", type=int, default=None,
                         help=f"grid size cap (default {DEFAULT_CAP}, env {ENV_CAP})")
    p_sweep.add_argument("--jobs", type=int, default=1,
                         help="worker processes (default 1)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_pull = sub.add_parser(
        "pullback", help="aggregate downstairs h1 through a finite cover"
    )
    common(p_pull)
    p_pull.set_defaults(func=cmd_pullback)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        where = f" (line {exc.line})" if exc.line else ""
        print(f"error: {exc}{where}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationFailedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GridTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except WindowExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NonIntegerResultError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
