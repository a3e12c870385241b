"""Command-line interface.

Subcommands
-----------
compute    print f(n) and/or L(n) for one n
table      emit the (n, f, L) cache CSV for a range
verify     replay checked properties over a range, report violations
residuals  emit n,f,approx,residual CSV with a summary row
export     write one sequence as a b-file ("n a(n)" lines)
resume     extend an existing cache CSV in place to a larger n

Exit codes: 0 success / no violations, 1 verification violation, 2 usage or
domain error, 3 I/O error, 4 corrupt cache.  Standard output is
machine-parseable; progress lines go to standard error every 10,000 rows on
long sweeps.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import analysis, exact, formats, sequence
from .errors import CorruptCacheError, DomainError, ResourceLimitError

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_CORRUPT = 4

# Exhaustive lemma21_holds sweeps get quadratically many cases with power
# sizes growing in n; the audited envelope stops here.
_L21_CAP = 300


def _progress(count: int) -> None:
    print(f"progress: {count} rows", file=sys.stderr)


def _emit(text: str, out: str | None) -> None:
    """Write to stdout (out omitted, '-' or 'stdout') or to a file path."""
    if out in (None, "-", "stdout"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="ascii")


def _cmd_compute(args: argparse.Namespace) -> int:
    if args.n < exact.MIN_N:
        print("n must be ≥ 3", file=sys.stderr)
        return EXIT_USAGE
    parts = []
    if args.seq in ("f", "both"):
        parts.append(f"f({args.n})={sequence.compute_f(args.n)}")
    if args.seq in ("L", "both"):
        parts.append(f"L({args.n})={sequence.compute_L(args.n)}")
    print(" ".join(parts))
    return EXIT_OK


def _sweep(args: argparse.Namespace) -> list[sequence.SequenceRecord]:
    return sequence.compute_range_parallel(
        args.from_n, args.to_n, workers=args.threads, progress=_progress
    )


def _cmd_table(args: argparse.Namespace) -> int:
    _emit(formats.render_cache(_sweep(args)), args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 5:
        print("--max-n must be ≥ 5", file=sys.stderr)
        return EXIT_USAGE
    if args.checks.strip() == "all":
        ids = list(sequence.CHECK_IDS)
    else:
        ids = [c.strip() for c in args.checks.split(",") if c.strip()]
        known = set(sequence.CHECK_IDS) | {"L2.1"}
        for check in ids:
            if check not in known:
                print(f"unknown check: {check}", file=sys.stderr)
                return EXIT_USAGE
    any_violation = False
    for check in ids:
        if check == "L2.1":
            report = _run_lemma21(args.max_n)
        else:
            report = sequence.verify(check, exact.MIN_N, args.max_n)
        print(f"{check}: {report.checked} checked, {len(report.violations)} violations")
        for n, detail in report.violations:
            print(f"  n={n}: {detail}")
        for note in report.notes:
            print(f"# {check}: {note}")
        any_violation = any_violation or bool(report.violations)
    return EXIT_VIOLATION if any_violation else EXIT_OK


def _run_lemma21(max_n: int) -> sequence.VerificationReport:
    """Exhaustive C(n,k)*k**k*(n-k)**(n-k) <= n**n sweep; checked counts (n,k) cases."""
    cap = min(max_n, _L21_CAP)
    violations: list[tuple[int, str]] = []
    checked = 0
    for n in range(1, cap + 1):
        for k in range(n):
            checked += 1
            if not exact.lemma21_holds(n, k):
                violations.append((n, f"bound fails at k={k}"))
    notes = [f"exhaustive over 1 ≤ n ≤ {cap}, 0 ≤ k ≤ n-1"]
    if max_n > _L21_CAP:
        notes.append(f"n capped at {_L21_CAP} (cost grows ~n³); requested {max_n}")
    return sequence.VerificationReport("L2.1", (1, cap), checked, violations, notes)


def _cmd_residuals(args: argparse.Namespace) -> int:
    records = _sweep(args)
    rows = analysis.residual_records(records)
    summary = analysis.residual_summary(args.from_n, args.to_n, records)
    lines = ["n,f,approx,residual"]
    lines.extend(f"{r.n},{r.f},{r.approx:.6f},{r.residual:.6f}" for r in rows)
    lines.append(
        f"# min={summary.min_residual:.6f} max={summary.max_residual:.6f} "
        f"mean={summary.mean_residual:.6f}"
    )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_export(args: argparse.Namespace) -> int:
    records = _sweep(args)
    pairs = [(r.n, r.f if args.seq == "f" else r.l) for r in records]
    text = formats.render_bfile(pairs)
    if formats.parse_bfile(text) != pairs:  # round-trip identity guard
        raise RuntimeError("b-file round-trip mismatch")
    Path(args.bfile).write_text(text, encoding="ascii")
    return EXIT_OK


def _cmd_resume(args: argparse.Namespace) -> int:
    records = formats.load_cache(args.cache)
    if not records:
        print("cache has no data rows to resume from", file=sys.stderr)
        return EXIT_USAGE
    last = records[-1]
    new_records = sequence.extend_range(last, args.to_n, progress=_progress)
    formats.append_cache(args.cache, new_records)
    return EXIT_OK


def _add_range_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--from", dest="from_n", type=int, required=True, metavar="N")
    sub.add_argument("--to", dest="to_n", type=int, required=True, metavar="N")
    sub.add_argument(
        "--threads",
        type=int,
        default=None,
        metavar="W",
        help="worker processes for range partitioning (default: logical cores)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binomthresh",
        description="Compute and verify the binomial threshold sequences f(n) and L(n).",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("compute", help="print f(n) and/or L(n) for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seq", choices=("f", "L", "both"), default="both")
    p.set_defaults(func=_cmd_compute)

    p = subs.add_parser("table", help="emit n,f,L cache CSV for a range")
    _add_range_args(p)
    p.add_argument("--out", default=None, help="output path, or 'stdout' (default)")
    p.set_defaults(func=_cmd_table)

    p = subs.add_parser("verify", help="replay checked properties, report violations")
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument(
        "--checks",
        default="all",
        help=f"comma list from {{{','.join(sequence.CHECK_IDS)},L2.1}} or 'all'",
    )
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("residuals", help="emit n,f,approx,residual CSV with summary")
    _add_range_args(p)
    p.add_argument("--out", default=None, help="output path, or 'stdout' (default)")
    p.set_defaults(func=_cmd_residuals)

    p = subs.add_parser("export", help="write one sequence as a b-file")
    _add_range_args(p)
    p.add_argument("--seq", choices=("f", "L"), required=True)
    p.add_argument("--bfile", required=True, help="output path for 'n a(n)' lines")
    p.set_defaults(func=_cmd_export)

    p = subs.add_parser("resume", help="extend an existing cache CSV in place")
    p.add_argument("--cache", required=True, help="path to an existing cache CSV")
    p.add_argument("--to", dest="to_n", type=int, required=True, metavar="N")
    p.add_argument("--threads", type=int, default=None, metavar="W", help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_resume)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors (and --help)
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except CorruptCacheError as err:
        print(f"corrupt cache: {err}", file=sys.stderr)
        return EXIT_CORRUPT
    except (DomainError, ResourceLimitError) as err:
        print(str(err), file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print(str(err), file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
