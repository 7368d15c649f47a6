"""Command-line front end.

Sequences are written over '+'/'-' with index 0 leftmost; a pair is "u:v".
Canonical forms are lexicographic minima of the GG-orbit with - < + on u||v.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence as Seq

from .orbits import DEFAULT_MEMBER_CAP, are_equivalent, canonical_pair, pair_orbit
from .search import SearchConfig, classify_lps, count_lps, enumerate_lps, search_canonical_only
from .seqops import (
    cyclic_shift,
    decimate,
    format_pair,
    is_legendre_pair,
    paf_spectrum,
    parse_pair,
    parse_sequence,
)
from .verifier import DEFAULT_SEED, run_checks


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _pair(text: str):
    p = parse_pair(text)
    if not (p.u.is_pm1 and p.v.is_pm1):
        raise ValueError(f"pair {text!r} must be written over '+'/'-'")
    return p


def cmd_verify(args, out):
    res = is_legendre_pair(_pair(args.pair))
    print("LP" if res.ok else f"NOT-LP: {res.witness}", file=out)
    return 0


def cmd_paf(args, out):
    v = parse_sequence(args.seq)
    print(",".join(str(x) for x in paf_spectrum(v, fast=args.fast)), file=out)
    return 0


def cmd_shift(args, out):
    print(str(cyclic_shift(parse_sequence(args.seq), args.by)), file=out)
    return 0


def cmd_decimate(args, out):
    print(str(decimate(parse_sequence(args.seq), args.by)), file=out)
    return 0


def cmd_orbit(args, out):
    rep = pair_orbit(_pair(args.pair), member_cap=args.member_cap)
    print(rep.to_line(), file=out)
    if args.members:
        if rep.members is None:
            print(f"orbit size {rep.size} exceeds member cap {args.member_cap}; members omitted", file=sys.stderr)
        else:
            for m in rep.members:
                print(format_pair(m), file=out)
    return 0


def cmd_canon(args, out):
    print(format_pair(canonical_pair(_pair(args.pair))), file=out)
    return 0


def cmd_equiv(args, out):
    if len(args.pair) != 2:
        raise UsageError("equiv needs exactly two --pair arguments")
    p1, p2 = (_pair(t) for t in args.pair)
    if p1.ell != p2.ell:
        raise ValueError(f"pair lengths differ: {p1.ell} vs {p2.ell}")
    print("EQUIVALENT" if are_equivalent(p1, p2) else "INEQUIVALENT", file=out)
    return 0


def _even_warning(ell: int):
    if ell % 2 == 0:
        print(f"warning: ell={ell} is even; no Legendre pairs exist", file=sys.stderr)


def cmd_search(args, out):
    _even_warning(args.ell)
    mode = "count-only" if args.count_only else ("representatives" if args.canonical_only else "full")
    cfg = SearchConfig(args.ell, mode=mode, workers=args.workers)
    if args.canonical_only:
        pairs = search_canonical_only(cfg)
        if args.count_only:
            print(len(pairs), file=out)
        else:
            for p in pairs:
                print(format_pair(p), file=out)
    elif args.count_only:
        print(count_lps(cfg), file=out)
    else:
        for p in enumerate_lps(cfg):
            print(format_pair(p), file=out)
    return 0


def cmd_classify(args, out):
    _even_warning(args.ell)
    report = classify_lps(SearchConfig(args.ell, mode="representatives", workers=args.workers))
    text = report.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_group_check(args, out):
    claims = args.claims.split(",") if args.claims else None
    certs = run_checks(args.ell, claims, seed=args.seed)
    for c in certs:
        print(c.to_line(), file=out)
    return 0 if all(c.passed for c in certs) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="lpequiv", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="test the Legendre-pair conditions")
    p.add_argument("--pair", required=True)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("paf", help="all periodic autocorrelation values")
    p.add_argument("--seq", required=True)
    p.add_argument("--fast", action="store_true", help="use the FFT path (rounded, checked)")
    p.set_defaults(fn=cmd_paf)

    p = sub.add_parser("shift", help="cyclic shift c_a")
    p.add_argument("--seq", required=True)
    p.add_argument("--by", type=int, required=True)
    p.set_defaults(fn=cmd_shift)

    p = sub.add_parser("decimate", help="decimation d_k")
    p.add_argument("--seq", required=True)
    p.add_argument("--by", type=int, required=True)
    p.set_defaults(fn=cmd_decimate)

    p = sub.add_parser("orbit", help="GG-orbit summary: canonical pair, size, stabilizer order")
    p.add_argument("--pair", required=True)
    p.add_argument("--members", action="store_true")
    p.add_argument("--member-cap", type=int, default=DEFAULT_MEMBER_CAP)
    p.set_defaults(fn=cmd_orbit)

    p = sub.add_parser("canon", help="canonical representative (lex-min, - < +)")
    p.add_argument("--pair", required=True)
    p.set_defaults(fn=cmd_canon)

    p = sub.add_parser("equiv", help="are two pairs in the same GG-orbit")
    p.add_argument("--pair", action="append", required=True)
    p.set_defaults(fn=cmd_equiv)

    p = sub.add_parser("search", help="exhaustive Legendre-pair search")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--canonical-only", action="store_true", help="emit canonical representatives only")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("classify", help="census of Legendre pairs by GG-orbit")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("group-check", help="finite-instance structure checks")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--claims", help="comma-separated claim ids")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(fn=cmd_group_check)
    return ap


_VALUE_FLAGS = ("--pair", "--seq")


def _attach_values(argv: Seq[str]) -> list[str]:
    """Glue values onto --pair/--seq so texts starting with '-' are not read as flags."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Optional[Seq[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_attach_values(argv))
        if getattr(args, "ell", 1) is not None and getattr(args, "ell", 1) < 1:
            raise UsageError("--ell must be >= 1")
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be >= 1")
        return args.fn(args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
