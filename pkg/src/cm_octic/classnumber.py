"""Class number h(-4p) by counting reduced binary quadratic forms.

A form (a, b, c) of discriminant b^2 - 4ac = -4p is reduced when
|b| <= a <= c, with b >= 0 whenever |b| = a or a = c.  Counting one
representative per class gives h(-4p) directly; the loop below walks
a up to sqrt(4p/3) and nonnegative even b (the discriminant forces b
even), counting b and -b together where both are reduced.
"""

from __future__ import annotations

from math import gcd, isqrt

from .modular import Prime

DEFAULT_CAP = 10_000_000


def class_number(p: Prime, cap: int = DEFAULT_CAP) -> int:
    """h(-4p) for p = 1 (mod 8), by exhaustive reduced-form counting.

    The O(p) form walk is intentional and exact; the cap guards against
    accidentally feeding it a huge prime.
    """
    if p.residue_class != 1:
        raise ValueError(f"class_number expects p = 1 (mod 8), got {p.value}")
    if p.value > cap:
        raise ValueError(
            f"p = {p.value} exceeds the class-number cap {cap}; raise the cap to proceed"
        )
    fourp = 4 * p.value
    h = 0
    for a in range(1, isqrt(fourp // 3) + 1):
        fa = 4 * a
        for b in range(0, a + 1, 2):
            t = b * b + fourp
            if t % fa:
                continue
            c = t // fa
            if c < a:
                continue
            if gcd(a, b, c) != 1:  # cannot trigger for -4p, kept as a guard
                continue
            # (a, -b, c) is a distinct reduced form unless b = 0, b = a, or a = c.
            h += 1 if b == 0 or b == a or a == c else 2
    return h
