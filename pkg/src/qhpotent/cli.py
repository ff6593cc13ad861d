"""Command-line front end.

Exit codes: 0 success or full agreement, 2 usage or limit error, 3 a
verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .errors import QuaternionCensusError
from .general import CharPair, count_roots, eval_theorem22
from .oracle import DEFAULT_LIMIT, oracle_spectrum
from .quaternion import Quaternion, is_nilpotent, is_zero_divisor, potency_index
from .report import METHODS, kpotent_census, table_rows, verify

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _prime_list(text: str) -> list[int]:
    items = [s.strip() for s in text.split(",") if s.strip()]
    try:
        return [int(s) for s in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid prime list {text!r}") from None


def cmd_count(args) -> int:
    result = kpotent_census(args.p, args.k, method=args.method, limit=args.brute_limit)
    if args.format == "json":
        print(_dump(result.to_dict()))
    else:
        print(f"p={result.p} k={result.k} count={result.count} method={result.method}")
    return EXIT_OK


def cmd_verify(args) -> int:
    records = verify(args.p, args.k_max, brute=not args.no_brute, limit=args.brute_limit)
    if args.format == "json":
        print(_dump([r.to_dict() for r in records]))
    else:
        columns = ["closed-form", "general", "oracle", "paper-literal"]
        print(f"{'k':>3}  " + "  ".join(f"{c:>13}" for c in columns) + "  agree")
        for r in records:
            cells = "  ".join(f"{r.values[c] if c in r.values else '-':>13}" for c in columns)
            print(f"{r.k:>3}  {cells}  {'yes' if r.agree else 'NO'}")
            for note in r.notes:
                print(f"     note: {note}")
    return EXIT_OK if all(r.agree for r in records) else EXIT_MISMATCH


def cmd_roots(args) -> int:
    result = count_roots(args.p, args.k)
    by_divisors = eval_theorem22(args.p, args.k)
    if args.format == "json":
        print(
            _dump(
                {
                    "p": result.p,
                    "k": result.k,
                    "count": result.total,
                    "divisor_sum": by_divisors,
                    "per_divisor": {str(d): s for d, s in result.per_divisor.items()},
                    "agree": by_divisors == result.total,
                }
            )
        )
    else:
        print(f"p={result.p} k={result.k} roots={result.total}")
        print(f"breakdown: {result.breakdown()}")
        print("per divisor: " + " ".join(f"d={d}:{s}" for d, s in result.per_divisor.items()))
        print(f"divisor sum of potent counts: {by_divisors}")
    if by_divisors != result.total:
        print(f"mismatch: class count {result.total} vs divisor sum {by_divisors}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_table(args) -> int:
    rows = table_rows(args.p_list, args.k_max, method=args.method, limit=args.brute_limit)
    if args.format == "json":
        print(_dump([r.to_dict() for r in rows]))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["p", "k", "count", "method"])
        for r in rows:
            writer.writerow([r.p, r.k, r.count, r.method])
        sys.stdout.write(buf.getvalue())
    else:
        for r in rows:
            print(f"{r.p:>5} {r.k:>4} {r.count:>12}  {r.method}")
    return EXIT_OK


def cmd_classify(args) -> int:
    q = Quaternion.parse(args.q, args.p)
    cls = potency_index(q)
    info = {
        "p": q.p,
        "q": str(q),
        "trace": q.trace().value,
        "norm": q.norm().value,
        "zero_divisor": is_zero_divisor(q),
        "nilpotent": is_nilpotent(q),
        "kind": cls.kind.value,
        "potency_index": cls.index if cls.kind.value == "potent" else None,
    }
    if q.is_scalar:
        info["class"] = "scalar"
    else:
        pair = CharPair.of_quaternion(q)
        info["class"] = f"({pair.t.value},{pair.n.value}) {pair.kind.value}"
    if args.format == "json":
        print(_dump(info))
    else:
        for key, value in info.items():
            if isinstance(value, bool):
                value = "yes" if value else "no"
            print(f"{key}: {'none' if value is None else value}")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    table = oracle_spectrum(args.p, cap=args.cap, limit=args.brute_limit)
    if args.format == "json":
        print(_dump(table.to_dict()))
    else:
        print(f"p={table.p} cap={table.cap} total={table.total}")
        print(f"nilpotent: {table.nilpotent_nonzero}")
        for k, v in table.by_index.items():
            print(f"k{k}: {v}")
        print(f"overflow: {table.overflow}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhpotent",
        description="k-potent and root censuses in the quaternion algebra over Z_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument(
            "--brute-limit",
            type=int,
            default=DEFAULT_LIMIT,
            help=f"largest p for exhaustive enumeration (default {DEFAULT_LIMIT})",
        )

    sp = sub.add_parser("count", help="count elements of minimal potency index k")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--method", choices=list(METHODS), default="general")
    common(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("verify", help="cross-check every method for k = 2..k-max")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--no-brute", action="store_true", help="skip exhaustive enumeration")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("roots", help="count solutions of x^k = 1")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("table", help="census table over several primes")
    sp.add_argument("--p-list", type=_prime_list, required=True)
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--method", choices=list(METHODS), default="general")
    common(sp, formats=("text", "csv", "json"))
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("classify", help="classify one quaternion c0,c1,c2,c3")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", required=True)
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("spectrum", help="exhaustive potency spectrum")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--cap", type=int, default=None)
    common(sp)
    sp.set_defaults(func=cmd_spectrum)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (QuaternionCensusError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
