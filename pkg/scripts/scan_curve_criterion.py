#!/usr/bin/env python3
"""Scan primes p = 1 (mod 8) and tally the curve criterion.

For each prime the harness recomputes chi(1 + sqrt2) by Euler's criterion
and #E(F_p) = (a-1)^2 + b^2 from the two-square decomposition, then checks
chi = +1 <=> 32 | #E alongside the d-parity corollary.  The chi and d-parity
columns of the aggregate must agree row for row; any divergence is a
counterexample and flips the exit code to 2.
"""

import argparse
import sys

from cm_octic.harness import ScanConfig, scan, write_scan_csv


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--from", dest="lo", type=int, default=0)
    ap.add_argument("--to", dest="hi", type=int, default=10**6)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default=None, help="also write the certificate CSV here")
    args = ap.parse_args(argv)

    report = scan(ScanConfig(lo=args.lo, hi=args.hi, jobs=args.jobs))
    agg = report.aggregate
    print(f"checked {report.primes_checked} primes in [{args.lo}, {args.hi}) "
          f"in {report.timing:.2f}s with {args.jobs} worker(s)")
    print(f"  chi = +1: {agg['chi_plus_1']:>8}    d even: {agg['d_even']:>8}")
    print(f"  chi = -1: {agg['chi_minus_1']:>8}    d odd:  {agg['d_odd']:>8}")
    print(f"  counterexamples: {len(report.counterexamples)}")
    for cert in report.counterexamples:
        print(f"    p={cert.p}: chi={cert.chi}, n mod 32 = {cert.n_mod_32}, d={cert.d}")

    if args.out:
        with open(args.out, "w") as fh:
            write_scan_csv(report.certificates, fh)
        print(f"  certificates written to {args.out}")

    if report.errors:
        for err in report.errors:
            print(f"invariant violation at p={err.p} [{err.stage}]: {err.message}",
                  file=sys.stderr)
        return 3
    return 2 if report.counterexamples else 0


if __name__ == "__main__":
    raise SystemExit(main())
