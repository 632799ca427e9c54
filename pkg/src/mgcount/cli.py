"""Command-line front end: ``mgcount count|table|verify|bench``.

Exit codes: 0 ok, 1 count mismatch, 2 usage error, 3 resource error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass
from typing import Sequence

from mgcount.core import Mode, satisfies
from mgcount.dp import TableAllocationError, build_tables, count_bounded, fill_rooted
from mgcount.free import count_free, rooted_counts_for
from mgcount.oracle import EnumerationBudgetError, bounded_histogram, enumerate_free, rooted_codes

log = logging.getLogger("mgcount")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# published (n, delta) -> 3-significant-figure count
TABLE1: dict[tuple[int, int], str] = {
    (8, 5): "4.41e3",
    (15, 10): "2.93e+9",
    (18, 13): "2.40e+12",
    (22, 15): "4.41e+15",
    (25, 18): "4.21e+18",
    (30, 20): "4.05e+22",
    (35, 15): "4.43e+23",
    (40, 20): "8.54e+28",
    (43, 33): "6.61e+35",
    (45, 36): "1.56e+38",
    (50, 44): "1.77e+44",
    (66, 48): "5.17e+56",
    (72, 50): "3.16e+61",
    (80, 40): "4.52e+62",
    (84, 45): "2.35e+67",
    (90, 50): "2.14e+73",
    (95, 50): "3.32e+76",
    (100, 40): "7.83e+74",
    (120, 35): "5.95e+83",
    (150, 30): "1.11e+97",
    (170, 25): "5.92e+103",
}
QUICK = [(8, 5), (15, 10), (18, 13), (22, 15), (25, 18)]


def sci3(x: int) -> str:
    """Round half up to 3 significant figures, e.g. ``4406 -> '4.41e+3'``."""
    if x < 0:
        raise ValueError("counts are non-negative")
    if x == 0:
        return "0.00e+0"
    digits = str(x)
    exp = len(digits) - 1
    head = int(digits[:3].ljust(3, "0"))
    if len(digits) > 3 and digits[3] >= "5":
        head += 1
        if head == 1000:
            head, exp = 100, exp + 1
    h = str(head)
    return f"{h[0]}.{h[1:]}e+{exp}"


def parse_sci(s: str) -> tuple[int, int]:
    """``'4.41e3'`` and ``'4.41e+3'`` both -> ``(441, 3)``: mantissa digits and exponent."""
    mant, _, exp = s.lower().partition("e")
    whole, _, frac = mant.partition(".")
    digits = (whole + frac).ljust(3, "0")[:3]
    return int(digits), int(exp or 0)


def sci_matches(count: int, published: str) -> bool:
    return parse_sci(sci3(count)) == parse_sci(published)


@dataclass(frozen=True)
class OutputRecord:
    n: int
    delta: int
    count_exact: str
    count_sci: str
    millis: float

    @classmethod
    def of(cls, n: int, delta: int, count: int, seconds: float) -> "OutputRecord":
        return cls(n, delta, str(count), sci3(count), round(seconds * 1000.0, 3))


FIELDS = ["n", "delta", "count_exact", "count_sci", "millis"]


def render(records: Sequence[OutputRecord], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in records], indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in records:
            writer.writerow(asdict(r))
        return buf.getvalue()
    lines = ["| " + " | ".join(FIELDS) + " |", "|" + "---|" * len(FIELDS)]
    for r in records:
        lines.append("| " + " | ".join(str(getattr(r, f)) for f in FIELDS) + " |")
    return "\n".join(lines) + "\n"


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def cmd_count(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    if args.rooted:
        n, d = args.n, args.delta
        value = count_bounded(n, d, max(n - 1, 0), d, d)
    else:
        value = count_free(args.n, args.delta).total
    rec = OutputRecord.of(args.n, args.delta, value, time.perf_counter() - t0)
    show_exact = args.exact or not args.sci
    show_sci = args.sci or not args.exact
    if show_exact:
        print(rec.count_exact)
    if show_sci:
        print(rec.count_sci)
    log.info("count(n=%d, delta=%d) took %.3f ms", rec.n, rec.delta, rec.millis)
    return EXIT_OK


def table_records(n_max: int, delta_max: int) -> list[OutputRecord]:
    t0 = time.perf_counter()
    tables = rooted_counts_for(n_max, delta_max)
    log.info("shared fill (%d, %d) took %.3f s", n_max, delta_max, time.perf_counter() - t0)
    records = []
    for n in range(1, n_max + 1):
        for d in range(delta_max + 1):
            t1 = time.perf_counter()
            value = count_free(n, d, tables).total
            records.append(OutputRecord.of(n, d, value, time.perf_counter() - t1))
    return records


def cmd_table(args: argparse.Namespace) -> int:
    sys.stdout.write(render(table_records(args.n_max, args.delta_max), args.format))
    return EXIT_OK


def verify(n_max: int, delta_max: int, inject_fault: bool = False) -> tuple[int, str | None]:
    """Run the oracle-vs-DP suite.  Returns (checks performed, first counterexample or None)."""
    tables = build_tables(n_max, delta_max)
    if inject_fault:
        idx = tables.index(n_max, delta_max, n_max - 1, delta_max, delta_max)
        tables.t_lll[idx] += 1
    rooted = fill_rooted(n_max, delta_max)
    checks = 0
    hists = {}

    for mode in Mode:
        for key in tables.legal_keys(mode):
            if (key.i, key.j) not in hists:
                hists[key.i, key.j] = bounded_histogram(key.i, key.j)
            hist = hists[key.i, key.j]
            expect = sum(c for s, c in hist.items() if satisfies(s, key.w, key.u, key.v, mode))
            got = tables.cell(key)
            checks += 1
            if got != expect:
                return checks, f"cell {key}: dp={got} oracle={expect}"

    for i in range(1, n_max + 1):
        for j in range(delta_max + 1):
            for w in range(1, i):
                for u in range(j + 1):
                    for v in range(j + 1):
                        g = tables.get
                        lhs = g(Mode.LLL, i, j, w, u, v)
                        rhs = g(Mode.LLL, i, j, w - 1, u, v) + g(Mode.ELL, i, j, w, u, v)
                        checks += 1
                        if lhs != rhs:
                            return checks, f"w-partition at ({i}, {j}, {w}, {u}, {v})"
                        if u and g(Mode.ELL, i, j, w, u, v) != g(Mode.ELL, i, j, w, u - 1, v) + g(
                            Mode.EEL, i, j, w, u, v
                        ):
                            return checks, f"u-partition at ({i}, {j}, {w}, {u}, {v})"
                        if v and g(Mode.EEL, i, j, w, u, v) != g(Mode.EEL, i, j, w, u, v - 1) + g(
                            Mode.EEE, i, j, w, u, v
                        ):
                            return checks, f"v-partition at ({i}, {j}, {w}, {u}, {v})"

    for n in range(1, n_max + 1):
        for d in range(delta_max + 1):
            total = len(rooted_codes(n, d))
            checks += 1
            if tables.rooted(n, d, n - 1) != total or rooted.total(n, d) != total:
                return checks, f"rooted total ({n}, {d}): oracle={total}"
            got = count_free(n, d, rooted).total
            expect = enumerate_free(n, d)
            checks += 1
            if got != expect:
                return checks, f"free count ({n}, {d}): dp={got} oracle={expect}"
    return checks, None


def cmd_verify(args: argparse.Namespace) -> int:
    checks, failure = verify(args.n_max, args.delta_max, args.inject_fault)
    if failure:
        print(f"FAIL after {checks} checks: {failure}")
        return EXIT_MISMATCH
    print(f"PASS: {checks} checks, n <= {args.n_max}, delta <= {args.delta_max}")
    return EXIT_OK


def bench_rows(suite: str) -> list[tuple[int, int]]:
    return list(TABLE1) if suite == "published" else QUICK


def cmd_bench(args: argparse.Namespace) -> int:
    mismatches = 0
    print("n,delta,count_sci,published,match,seconds")
    for n, d in bench_rows(args.suite):
        t0 = time.perf_counter()
        value = count_free(n, d, published_formula=args.formula == "published").total
        dt = time.perf_counter() - t0
        ok = sci_matches(value, TABLE1[(n, d)])
        mismatches += not ok
        print(f"{n},{d},{sci3(value)},{TABLE1[(n, d)]},{'match' if ok else 'MISMATCH'},{dt:.3f}", flush=True)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mgcount",
        description="Count non-isomorphic tree-like multigraphs by vertices and extra edges.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="timing diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="one (n, delta) count")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--delta", type=_nonneg, required=True)
    p.add_argument("--rooted", action="store_true", help="rooted classes instead of free ones")
    p.add_argument("--exact", action="store_true", help="print the full decimal count")
    p.add_argument("--sci", action="store_true", help="print the 3-significant-figure form")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="free counts over a grid of (n, delta)")
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--delta-max", type=_nonneg, required=True)
    p.add_argument("--format", choices=["csv", "json", "md"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check the DP against brute-force enumeration")
    p.add_argument("--n-max", type=_positive, default=8)
    p.add_argument("--delta-max", type=_nonneg, default=4)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="reproduce the published counts with timings")
    p.add_argument("suite", nargs="?", choices=["published", "quick"], default="quick")
    p.add_argument(
        "--formula",
        choices=["unordered", "published"],
        default="unordered",
        help="bicentroid pairing: correct unordered pairs, or the published closed formula",
    )
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (MemoryError, TableAllocationError, EnumerationBudgetError) as exc:
        print(f"mgcount: resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
