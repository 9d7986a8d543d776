"""Built-in invariant suite over small primes, runnable as `cm-octic selftest`.

Everything here is exhaustive rather than sampled, so a pass is a real
certificate for the covered range.  Checks mirror the package's contract:
symbol/sqrt consistency, canonical roots, the eta endomorphism identities,
point counts against the CM order formula, decomposition oracles, and the
criteria themselves with class numbers on a small range.
"""

from __future__ import annotations

from math import isqrt
from typing import Callable

from .criteria import Certificate, check_prime
from .curve import (
    all_points,
    add,
    curve_order,
    eta_apply,
    eta_preimages,
    eta_x_via_rational_map,
    eta_x_via_slope,
    eta_y_via_slope,
    i_action,
    kernel,
    naive_point_count,
    negate,
    scalar_mul,
)
from .decompose import eight_decomposition, eight_decomposition_search, two_squares
from .modular import Prime, canonical_i, canonical_sqrt2, element, jacobi, sqrt_mod
from .harness import primes_1_mod_8

ETA_PRIMES = (17, 41, 73, 89, 97, 113)


def _odd_primes_upto(limit: int) -> list[int]:
    return [n for n in range(3, limit + 1, 2) if all(n % q for q in range(3, isqrt(n) + 1, 2))]


def check_symbols_exhaustive(limit: int = 257) -> str:
    """jacobi and sqrt_mod agree with exhaustive squaring for every p <= limit."""
    for v in _odd_primes_upto(limit):
        p = Prime(v)
        squares = {x * x % v for x in range(1, v)}
        for a in range(v):
            sym = jacobi(a, p)
            expected = 0 if a == 0 else (1 if a in squares else -1)
            assert sym == expected, (v, a, sym, expected)
            euler = pow(a, (v - 1) // 2, v)
            assert sym % v == euler, (v, a)
            roots = sqrt_mod(element(p, a))
            if expected == -1:
                assert roots is None, (v, a)
            else:
                assert roots is not None and roots[0].residue <= roots[1].residue
                assert all(r.residue * r.residue % v == a for r in roots), (v, a)
    return f"jacobi/sqrt_mod exhaustive over odd primes <= {limit}"


def check_canonical_roots(limit: int = 2000) -> str:
    """canonical_i and canonical_sqrt2 square back to -1 and 2."""
    count = 0
    for p in primes_1_mod_8(0, limit):
        i = canonical_i(p)
        s = canonical_sqrt2(p)
        assert (i * i).residue == p.value - 1, p.value
        assert (s * s).residue == 2, p.value
        assert i.residue <= p.value - i.residue and s.residue <= p.value - s.residue
        count += 1
    return f"canonical roots verified for {count} primes < {limit}"


def check_eta_suite(primes: tuple[int, ...] = ETA_PRIMES) -> str:
    """The full eta contract, exhaustively over every point of E(F_p)."""
    for v in primes:
        p = Prime(v)
        pts = list(all_points(p))
        ker = kernel(p)
        squares = {x * x % v for x in range(v)}  # includes 0
        for P in pts:
            # [i] is an automorphism with [i]^2 = negation.
            assert i_action(i_action(P)) == negate(P), (v, P)
            # eta o eta = [2] o [i]
            assert eta_apply(eta_apply(P)) == scalar_mul(2, i_action(P)), (v, P)
            if not P.is_infinity and P.x.residue != 0:
                Q = eta_apply(P)
                x_slope = eta_x_via_slope(P)
                x_map = eta_x_via_rational_map(P)
                assert x_slope == x_map, (v, P)
                if Q.is_infinity:
                    assert False, "eta(P) = O forces P in the kernel"
                assert Q.x == x_slope, (v, P)
                assert Q.y == eta_y_via_slope(P, x_slope), (v, P)
                assert x_slope.residue in squares, (v, P)
            if P in ker:
                assert eta_apply(P).is_infinity, (v, P)
        # eta is a homomorphism.
        for a_idx in range(0, len(pts), 3):
            for b_idx in range(0, len(pts), 5):
                A, B = pts[a_idx], pts[b_idx]
                assert eta_apply(add(A, B)) == add(eta_apply(A), eta_apply(B)), (v, A, B)
        # Preimage criterion, fiber sizes, and the fiber partition.
        assert eta_preimages(pts[0], p) == ker
        total = 0
        for Q in pts:
            pre = eta_preimages(Q, p)
            total += len(pre)
            for P in pre:
                assert eta_apply(P) == Q, (v, Q, P)
            if not Q.is_infinity:
                assert (len(pre) > 0) == (Q.x.residue in squares), (v, Q)
                assert len(pre) in (0, 2), (v, Q)
                if len(pre) == 2:
                    lo, hi = sorted(pre, key=lambda t: (t.x.residue, t.y.residue))
                    torsion = next(k for k in ker if not k.is_infinity)
                    assert add(lo, torsion) == hi, (v, Q)
        assert total == len(pts), f"fibers must partition E(F_{v})"
    return f"eta endomorphism suite exhaustive over p in {primes}"


def check_point_counts(limit: int = 2000) -> str:
    """(a-1)^2 + b^2 equals the naive point count for every p = 1 (mod 8) < limit."""
    count = 0
    for p in primes_1_mod_8(0, limit):
        assert curve_order(p) == naive_point_count(p), p.value
        count += 1
    return f"curve order = naive count for {count} primes < {limit}"


def check_decompositions(limit: int = 20000) -> str:
    """Cornacchia output matches brute-force search and normalization rules."""
    count = 0
    for p in primes_1_mod_8(0, limit):
        v = p.value
        ts = two_squares(p)
        assert ts.a * ts.a + ts.b * ts.b == v
        e8 = eight_decomposition(p)
        slow = eight_decomposition_search(p)
        assert (e8.c, e8.d) == (slow.c, slow.d), v
        count += 1
    return f"decompositions cross-checked for {count} primes < {limit}"


def check_criteria_small(limit: int = 5000) -> str:
    """All three criteria hold, with class numbers, for p < limit."""
    count = 0
    for p in primes_1_mod_8(0, limit):
        cert = check_prime(p, with_class_number=True)
        assert isinstance(cert, Certificate), f"stage failure at {p.value}: {cert}"
        assert cert.all_hold, p.value
        assert cert.h is not None and cert.h % 2 == 0, p.value  # genus parity
        count += 1
    return f"criteria + class numbers verified for {count} primes < {limit}"


CHECKS: tuple[Callable[[], str], ...] = (
    check_symbols_exhaustive,
    check_canonical_roots,
    check_eta_suite,
    check_point_counts,
    check_decompositions,
    check_criteria_small,
)


def run_all(verbose: bool = True) -> bool:
    ok = True
    for fn in CHECKS:
        try:
            detail = fn()
        except AssertionError as exc:
            ok = False
            if verbose:
                print(f"FAIL {fn.__name__}: {exc}")
        else:
            if verbose:
                print(f"PASS {fn.__name__}: {detail}")
    return ok
