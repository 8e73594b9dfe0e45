"""qdisc command line: disc, roots, verify, scan.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass

from gmpy2 import mpq

from .closed_form import discriminant_closed_form
from .exact_core import Poly, format_rational, parse_rational, resultant
from .params import QuadrinomialParams
from .real_roots import count_real_roots, isolate_real_roots
from .verify import run_verification, specialize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CSV_FIELDS = ("n", "a", "b", "t", "disc", "abs_disc", "n_real_roots")

# flags whose values may be negative fractions like -1/2, which argparse
# would otherwise read as an option
_VALUE_FLAGS = {"--a", "--b", "--t", "--poly"}
_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?(,.*)?$")


class UsageError(Exception):
    pass


def worker_count() -> int:
    env = os.environ.get("QDISC_THREADS")
    if env:
        try:
            k = int(env)
        except ValueError:
            raise UsageError(f"QDISC_THREADS must be a positive integer, got {env!r}")
        if k < 1:
            raise UsageError("QDISC_THREADS must be >= 1")
        return k
    return os.cpu_count() or 1


@contextmanager
def _mapper(jobs: int):
    if jobs <= 1:
        yield map
        return
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        yield ex.map


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _poly_arg(text: str) -> Poly:
    try:
        return Poly.from_text(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {v}")
    return v


# -- disc ------------------------------------------------------------------------


def cmd_disc(args, out) -> int:
    if args.n < 3:
        raise UsageError("n must be >= 3")
    delta = discriminant_closed_form(QuadrinomialParams(args.n, args.a, args.b))
    if args.t is None:
        print(delta.to_text(), file=out)
    else:
        print(format_rational(delta(args.t)), file=out)
    return EXIT_OK


# -- roots -----------------------------------------------------------------------


def cmd_roots(args, out) -> int:
    f = args.poly
    if not f:
        raise UsageError("the zero polynomial has no root count")
    count = count_real_roots(f)
    iso = isolate_real_roots(f)
    report = {
        "count": count,
        "intervals": [[format_rational(lo), format_rational(hi)] for lo, hi in iso.intervals],
        "exact_roots": [format_rational(r) for r in iso.exact_roots],
    }
    print(json.dumps(report), file=out)
    return EXIT_OK


# -- verify ----------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    if args.n_max < 3:
        raise UsageError("--n-max must be >= 3")
    with _mapper(worker_count()) as mapper:
        reports = run_verification(args.n_max, args.trials, args.seed, mapper=mapper)
    for r in reports:
        print(f"n={r.n} {'PASS' if r.ok else 'FAIL'} {r.passed}/{r.total}", file=out)
        for case in r.failures:
            p = case.params
            print(
                f"  mismatch a={format_rational(p.a)} b={format_rational(p.b)}"
                f" bezoutian={case.bezoutian_ok} resultant={case.resultant_ok}",
                file=out,
            )
    good = sum(r.ok for r in reports)
    status = "OK" if good == len(reports) else "FAIL"
    print(f"{status} {good}/{len(reports)}", file=out)
    return EXIT_OK if status == "OK" else EXIT_FAIL


# -- scan ------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanRecord:
    n: int
    a: int
    b: int
    t: int
    disc: int
    n_real_roots: int

    @property
    def abs_disc(self) -> int:
        return abs(self.disc)

    def sort_key(self) -> tuple:
        # nonzero discriminants first, then (abs_disc, a, b, t)
        return (self.disc == 0, self.abs_disc, self.a, self.b, self.t)

    def row(self) -> list[str]:
        return [str(v) for v in (self.n, self.a, self.b, self.t, self.disc, self.abs_disc, self.n_real_roots)]


def scan_shard(n: int, a: int, rng_b: int, t_range: int) -> list[ScanRecord]:
    """All records with this value of a."""
    out = []
    for b in range(-rng_b, rng_b + 1):
        if a == 0 and b == 0:
            continue
        delta = discriminant_closed_form(QuadrinomialParams(n, a, b))
        for t in range(1, t_range + 1):
            f = specialize(QuadrinomialParams(n, a, b), t)
            out.append(ScanRecord(n, a, b, t, int(delta(t)), count_real_roots(f)))
    return out


def scan(n: int, rng: int, t_range: int, mapper=map) -> list[ScanRecord]:
    avals = list(range(-rng, rng + 1))
    k = len(avals)
    shards = mapper(scan_shard, [n] * k, avals, [rng] * k, [t_range] * k)
    records = [r for shard in shards for r in shard]
    records.sort(key=ScanRecord.sort_key)
    return records


def spot_check(records: list[ScanRecord], seed: int = 0) -> list[ScanRecord]:
    """Re-derive 1% of records (at least one) from the resultant; return mismatches."""
    if not records:
        return []
    rng = random.Random(seed)
    k = max(1, math.ceil(len(records) / 100))
    bad = []
    for rec in rng.sample(records, k):
        n = rec.n
        f = specialize(QuadrinomialParams(n, rec.a, rec.b), rec.t)
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        if sign * resultant(f, f.derivative()) != mpq(rec.disc):
            bad.append(rec)
    return bad


def render(records: list[ScanRecord], fmt: str) -> str:
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        w.writerows(r.row() for r in records)
    else:
        json.dump([dict(zip(CSV_FIELDS, r.row())) for r in records], buf, indent=1)
        buf.write("\n")
    return buf.getvalue()


def cmd_scan(args, out) -> int:
    if args.n < 3:
        raise UsageError("n must be >= 3")
    sink = None
    if args.out != "-":
        try:
            sink = open(args.out, "w", encoding="utf-8", newline="")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror or exc}")
    try:
        with _mapper(worker_count()) as mapper:
            records = scan(args.n, args.range, args.t_range, mapper)
        text = render(records, args.format)
        (sink or out).write(text)
    finally:
        if sink:
            sink.close()
    bad = spot_check(records, args.seed)
    if bad:
        for rec in bad:
            print(f"spot-check mismatch: {rec}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# -- entry -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qdisc", description="Exact discriminants and real-root counts of x^n + t(x^2 + a x + b).")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("disc", help="discriminant as a polynomial in t, or its value at t")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--a", type=_rational_arg, required=True)
    d.add_argument("--b", type=_rational_arg, required=True)
    d.add_argument("--t", type=_rational_arg)
    d.set_defaults(func=cmd_disc)

    r = sub.add_parser("roots", help="count and isolate the real roots of a polynomial")
    r.add_argument("--poly", type=_poly_arg, required=True, help='constant-first coefficients, e.g. "1,0,1"')
    r.set_defaults(func=cmd_roots)

    v = sub.add_parser("verify", help="closed form vs Bezoutian vs resultant")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--trials", type=_positive_int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="scan an integer (a, b, t) grid for small discriminants")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--range", type=_positive_int, required=True)
    s.add_argument("--t-range", type=_positive_int, required=True)
    s.add_argument("--out", default="-", help="output path, '-' for stdout")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--seed", type=int, default=0, help="seed for the spot-check sample")
    s.set_defaults(func=cmd_scan)
    return p


def _join_negative_values(argv: list[str]) -> list[str]:
    fixed = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            fixed.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        fixed.append(tok)
        i += 1
    return fixed


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"qdisc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
