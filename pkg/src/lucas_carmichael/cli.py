"""Command-line interface. Data goes to stdout as JSON lines, diagnostics to stderr.

Exit codes: 0 success / LC, 1 negative verdict or failed check, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .enumeration import compare_enumerations, default_workers, enumerate_dfs, enumerate_oracle
from .errors import InvalidInputError, PreconditionError
from .families import (
    builtin,
    derive_family,
    digit_sum_profile,
    evaluate,
    family_factorization,
    format_family,
    iter_ktuple_search,
    parse_family,
    verify_congruence_symbolic,
    verify_expansion_symbolic,
)
from .lc_core import LcReport, analyze, analyze_factorization

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2


def report_record(report: LcReport, flags=(), **extra) -> dict:
    """OutputRecord for one report. Integers are decimal strings."""
    f = report.factorization
    flags = list(flags)
    if not f.proven:
        flags.append("probable-prime")
    rec = {
        "n": str(report.n),
        "factors": [str(p) for p, e in f.factors for _ in range(e)],
        "is_lc": report.is_lc,
        "degree": report.degree,
        "primary": report.primary,
        "digit_sums": [{"p": str(x.p), "s": str(x.s)} for x in report.per_prime],
        "flags": flags,
    }
    rec.update(extra)
    return rec


def emit(rec: dict) -> None:
    sys.stdout.write(json.dumps(rec) + "\n")


def fail(msg: str, code: int = EXIT_USAGE) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _parse_int(text: str) -> int:
    text = text.strip()
    if not text.lstrip("+-").isdigit():
        raise InvalidInputError(f"not a decimal integer: {text!r}")
    return int(text)


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise InvalidInputError(f"--m expects A..B, got {text!r}")
    return _parse_int(lo), _parse_int(hi)


def _threads(args) -> int:
    try:
        return args.threads if args.threads is not None else default_workers()
    except ValueError:
        raise InvalidInputError("LC_THREADS must be an integer") from None


# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    n = _parse_int(args.n)
    if n < 2:
        raise InvalidInputError(f"n must be >= 2, got {n}")
    report = analyze(n)
    emit(report_record(report))
    return EXIT_OK if report.is_lc else EXIT_NO


def cmd_enumerate(args) -> int:
    limit = _parse_int(args.limit)
    if limit < 3:
        raise InvalidInputError(f"--limit must be >= 3, got {limit}")
    workers = _threads(args)
    run = {
        "dfs": lambda: enumerate_dfs(limit, workers),
        "oracle": lambda: enumerate_oracle(limit),
    }
    result = run[args.method]()
    if args.compare:
        other = run["oracle" if args.method == "dfs" else "dfs"]()
        cmp = compare_enumerations(result, other)
        if not cmp.equal:
            for e in result.entries:
                emit(report_record(e))
            return fail(
                f"methods diverge at index {cmp.position}: "
                f"{args.method}={cmp.left} vs other={cmp.right}",
                EXIT_NO,
            )
        print(f"dfs and oracle agree: {len(result.entries)} values <= {limit}", file=sys.stderr)
    for e in result.entries:
        emit(report_record(e))
    return EXIT_OK


def cmd_family(args) -> int:
    if args.spec:
        with open(args.spec, encoding="utf-8") as fh:
            spec = parse_family(fh.read(), provenance=args.spec)
    elif args.name:
        spec = builtin(args.name)
    else:
        raise InvalidInputError("give a family name (u3, u5, u7) or --spec FILE")
    if args.m is None and not args.verify_symbolic:
        raise InvalidInputError("nothing to do: pass --m A..B and/or --verify-symbolic")

    status = EXIT_OK
    if args.verify_symbolic:
        ok = verify_congruence_symbolic(spec)
        emit({"check": "congruence", "family": spec.provenance, "pass": ok})
        status |= not ok
        for claim in spec.claims:
            ok = verify_expansion_symbolic(claim)
            emit({"check": "expansion", "claim": claim.label, "pass": ok})
            status |= not ok

    if args.m is not None:
        lo, hi = _parse_range(args.m)
        stride = spec.m_divisor if args.stride is None else _parse_int(args.stride)
        if stride < 1 or stride % spec.m_divisor:
            raise InvalidInputError(f"stride {stride} is not a multiple of m_divisor {spec.m_divisor}")
        if lo % spec.m_divisor:
            raise InvalidInputError(f"m = {lo} is not a multiple of m_divisor {spec.m_divisor}")
        if lo > hi:
            raise InvalidInputError(f"empty m range {args.m}")
        if lo < spec.m_min:
            print(f"note: m below m_min = {spec.m_min}; records are flagged below-m-min",
                  file=sys.stderr)

        def extras(m: int) -> tuple[list, dict]:
            flags = ["below-m-min"] if m < spec.m_min else []
            extra = {"m": str(m)}
            if args.digit_sums:
                extra["profile"] = [
                    {"p": str(p), "s": str(s)} for p, s in digit_sum_profile(spec, m, explore=True)
                ]
            return flags, extra

        if args.require_prime:
            for hit in iter_ktuple_search(spec, (lo, hi), stride, explore=True, workers=_threads(args)):
                flags, extra = extras(hit.m)
                emit(report_record(hit.report, flags, **extra))
        else:
            for m in range(lo, hi + 1, stride):
                ev = evaluate(spec, m, explore=True)
                flags, extra = extras(m)
                emit(report_record(analyze_factorization(family_factorization(ev)), flags, **extra))
    return EXIT_NO if status else EXIT_OK


def cmd_derive(args) -> int:
    n = _parse_int(args.n)
    if n < 2:
        raise InvalidInputError(f"n must be >= 2, got {n}")
    report = analyze(n)
    try:
        fam = derive_family(report)
    except PreconditionError as exc:
        return fail(str(exc), EXIT_NO)
    out = format_family(fam.spec)
    out += f"# k1 {fam.k1}\n# r {' '.join(map(str, fam.r))}\n# R {fam.R}\n"
    sys.stdout.write(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucas-carmichael",
        description="Lucas-Carmichael integers: tests, enumeration and polynomial families.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    threads = argparse.ArgumentParser(add_help=False)
    threads.add_argument("--threads", type=int, default=None,
                         help="worker processes (default: $LC_THREADS or CPU count)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="analyze one integer")
    p.add_argument("n")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[threads], help="list LC integers up to a limit")
    p.add_argument("--limit", required=True)
    p.add_argument("--method", choices=("dfs", "oracle"), default="dfs")
    p.add_argument("--compare", action="store_true", help="run both methods and require agreement")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("family", parents=[threads], help="evaluate or verify a polynomial family")
    p.add_argument("name", nargs="?", choices=("u3", "u5", "u7"))
    p.add_argument("--spec", metavar="FILE", help="family in the plain-text format")
    p.add_argument("--m", metavar="A..B", help="inclusive m range")
    p.add_argument("--stride", help="step in m (default: the family's m_divisor)")
    p.add_argument("--require-prime", action="store_true", help="only m with all factors prime")
    p.add_argument("--verify-symbolic", action="store_true")
    p.add_argument("--digit-sums", action="store_true", help="add S_{p+2}(n+2) per factor value")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("derive-family", help="family through a seed LC integer")
    p.add_argument("n")
    p.set_defaults(func=cmd_derive)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInputError, PreconditionError) as exc:
        return fail(str(exc))
    except OSError as exc:
        return fail(str(exc))
    finally:
        sys.stdout.flush()


if __name__ == "__main__":
    sys.exit(main())
