"""Range scanning: prime streaming, parallel certificate checks, output.

Scans are deterministic: given the same configuration the emitted CSV/JSON
bytes are identical regardless of worker count, because the per-prime work
is pure and results are merged in prime order.  Wall-clock timing lives
only on the ScanReport, never in the serialized output.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from math import isqrt
from typing import Iterator, TextIO

from .criteria import Certificate, ErrorCertificate, check_prime
from .modular import MODULUS_BOUND, Prime, is_prime

_SEGMENT = 1 << 18
_SIEVE_LIMIT = 1 << 33  # above this, trial sieving gives way to the 1-mod-8 wheel

CSV_HEADER = "p,a,b,c,d,chi,n,n_mod_32,d_parity,h,h_mod_8,thm1,thm2,corollary"


@dataclass(frozen=True)
class ScanConfig:
    """A scan over primes p = 1 (mod 8) in [lo, hi).

    class_number_cap: compute h(-4p) only for p <= cap (0 disables).
    seed feeds any randomized point searches so runs are reproducible.
    """

    lo: int
    hi: int
    class_number_cap: int = 0
    jobs: int = 1
    format: str = "csv"
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.lo < self.hi <= MODULUS_BOUND:
            raise ValueError(f"need 0 <= lo < hi <= 2**62, got [{self.lo}, {self.hi})")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")
        if self.class_number_cap < 0:
            raise ValueError("class_number_cap must be >= 0")


@dataclass
class ScanReport:
    primes_checked: int
    counterexamples: list[Certificate]
    timing: float
    aggregate: dict[str, int]
    certificates: list[Certificate] = field(default_factory=list)
    errors: list[ErrorCertificate] = field(default_factory=list)


def _simple_sieve(limit: int) -> list[int]:
    # Primes strictly below limit.
    if limit <= 2:
        return []
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit - 1) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit, i)))
    return [i for i in range(limit) if flags[i]]


def _sieved_primes(lo: int, hi: int) -> Iterator[int]:
    # All primes in [lo, hi) via a segmented sieve.
    root = isqrt(hi - 1)
    base = _simple_sieve(root + 1)
    for q in base:
        if lo <= q < hi:
            yield q
    start = max(lo, root + 1)
    for seg_lo in range(start, hi, _SEGMENT):
        seg_hi = min(seg_lo + _SEGMENT, hi)
        flags = bytearray([1]) * (seg_hi - seg_lo)
        for q in base:
            if q * q >= seg_hi:
                break
            first = max(q * q, ((seg_lo + q - 1) // q) * q)
            flags[first - seg_lo :: q] = bytes(len(range(first, seg_hi, q)))
        for idx, alive in enumerate(flags):
            if alive:
                yield seg_lo + idx


def primes_1_mod_8(lo: int, hi: int) -> Iterator[Prime]:
    """Stream the primes p = 1 (mod 8) in [lo, hi), in increasing order."""
    if not 0 <= lo < hi <= MODULUS_BOUND:
        raise ValueError(f"need 0 <= lo < hi <= 2**62, got [{lo}, {hi})")
    if hi <= _SIEVE_LIMIT:
        for q in _sieved_primes(lo, hi):
            if q % 8 == 1:
                yield Prime(q)
    else:
        start = lo + (1 - lo) % 8  # first value = 1 (mod 8) at or above lo
        for q in range(max(start, 17), hi, 8):
            if is_prime(q):
                yield Prime(q)


def _check_one(args: tuple[Prime, int]) -> Certificate | ErrorCertificate:
    p, cap = args
    with_h = 0 < p.value <= cap
    return check_prime(p, with_class_number=with_h, class_number_cap=max(cap, 1))


def scan(config: ScanConfig) -> ScanReport:
    """Check every prime p = 1 (mod 8) in [lo, hi); deterministic output order."""
    t0 = time.perf_counter()
    work = [(p, config.class_number_cap) for p in primes_1_mod_8(config.lo, config.hi)]
    if config.jobs == 1 or len(work) < 2:
        results = [_check_one(w) for w in work]
    else:
        chunk = max(1, len(work) // (config.jobs * 8))
        with multiprocessing.Pool(config.jobs) as pool:
            results = pool.map(_check_one, work, chunksize=chunk)
    certificates = [r for r in results if isinstance(r, Certificate)]
    errors = [r for r in results if isinstance(r, ErrorCertificate)]
    counterexamples = [c for c in certificates if not c.all_hold]
    aggregate = {
        "chi_plus_1": sum(1 for c in certificates if c.chi == 1),
        "chi_minus_1": sum(1 for c in certificates if c.chi == -1),
        "d_even": sum(1 for c in certificates if c.d % 2 == 0),
        "d_odd": sum(1 for c in certificates if c.d % 2 == 1),
    }
    return ScanReport(
        primes_checked=len(results),
        counterexamples=counterexamples,
        timing=time.perf_counter() - t0,
        aggregate=aggregate,
        certificates=certificates,
        errors=errors,
    )


def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "p": cert.p,
        "a": cert.a,
        "b": cert.b,
        "c": cert.c,
        "d": cert.d,
        "chi": cert.chi,
        "n": cert.n,
        "n_mod_32": cert.n_mod_32,
        "h": cert.h,
        "thm2_holds": cert.thm2_holds,
        "thm1_holds": cert.thm1_holds,
        "corollary_holds": cert.corollary_holds,
    }


def certificate_csv_row(cert: Certificate) -> str:
    chi = "+1" if cert.chi == 1 else "-1"
    h = "" if cert.h is None else str(cert.h)
    h_mod_8 = "" if cert.h is None else str(cert.h % 8)
    thm1 = "" if cert.thm1_holds is None else str(int(cert.thm1_holds))
    return (
        f"{cert.p},{cert.a},{cert.b},{cert.c},{cert.d},{chi},{cert.n},{cert.n_mod_32},"
        f"{cert.d % 2},{h},{h_mod_8},{thm1},{int(cert.thm2_holds)},{int(cert.corollary_holds)}"
    )


def write_scan_csv(certificates: list[Certificate], out: TextIO) -> None:
    out.write(CSV_HEADER + "\n")
    for cert in certificates:
        out.write(certificate_csv_row(cert) + "\n")


def write_scan_json(report: ScanReport, out: TextIO) -> None:
    doc = {
        "primes_checked": report.primes_checked,
        "aggregate": report.aggregate,
        "counterexamples": [certificate_to_dict(c) for c in report.counterexamples],
        "certificates": [certificate_to_dict(c) for c in report.certificates],
    }
    json.dump(doc, out, indent=2)
    out.write("\n")
