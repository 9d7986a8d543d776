"""Prime-field arithmetic: primality, quadratic symbols, modular square roots.

All functions use exact integer arithmetic.  Moduli are odd primes below
2**62; that bound is part of the contract even though Python integers would
happily go further.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

MODULUS_BOUND = 1 << 62

# Witnesses that make Miller-Rabin deterministic for every n below
# 3_317_044_064_679_887_385_961_981 (Sorenson & Webster 2015), which covers
# the full 64-bit range with room to spare.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all 64-bit inputs."""
    if n < 0:
        raise ValueError("is_prime expects a nonnegative integer")
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Prime:
    """An odd prime modulus in (2, 2**62), with p mod 8 cached.

    Construction runs the deterministic primality test; an instance is
    therefore a proof of primality.  Most of the package additionally wants
    p = 1 (mod 8); use pipeline_prime for that stricter entry point.
    """

    value: int
    residue_class: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 2 < self.value < MODULUS_BOUND:
            raise ValueError(f"modulus must lie in (2, 2**62), got {self.value}")
        if not is_prime(self.value):
            raise ValueError(f"modulus must be prime, got {self.value}")
        object.__setattr__(self, "residue_class", self.value % 8)


def pipeline_prime(n: int) -> Prime:
    """Construct a Prime for the main pipeline, which needs p = 1 (mod 8)."""
    p = Prime(n)
    if p.residue_class != 1:
        raise ValueError(f"expected a prime = 1 (mod 8), got {n} = {n % 8} (mod 8)")
    return p


@dataclass(frozen=True)
class FieldElement:
    """A residue in [0, p) tied to its prime modulus.

    Arithmetic never mixes moduli; doing so is a programming error and is
    guarded by assertions, not recoverable exceptions.  Plain ints coerce
    into the field of the other operand.
    """

    residue: int
    modulus: Prime

    def __post_init__(self) -> None:
        if not 0 <= self.residue < self.modulus.value:
            raise ValueError(
                f"residue {self.residue} out of range for modulus {self.modulus.value}"
            )

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            assert self.modulus == other.modulus, "operands from different prime fields"
            return other.residue
        return other % self.modulus.value

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement((self.residue + self._coerce(other)) % self.modulus.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement((self.residue - self._coerce(other)) % self.modulus.value, self.modulus)

    def __rsub__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement((self._coerce(other) - self.residue) % self.modulus.value, self.modulus)

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.residue * self._coerce(other) % self.modulus.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.residue % self.modulus.value, self.modulus)

    def inverse(self) -> FieldElement:
        return FieldElement(pow(self.residue, -1, self.modulus.value), self.modulus)

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        if isinstance(other, int):
            other = element(self.modulus, other)
        assert self.modulus == other.modulus, "operands from different prime fields"
        return self * other.inverse()


def element(p: Prime, value: int) -> FieldElement:
    """Reduce an arbitrary integer into F_p."""
    return FieldElement(value % p.value, p)


def _jacobi(a: int, n: int) -> int:
    # Binary Jacobi algorithm; n odd and positive.
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def jacobi(a: int, p: Prime) -> int:
    """The symbol (a/p): +1 for nonzero squares, -1 for non-squares, 0 if p | a."""
    return _jacobi(a, p.value)


def pow_mod(a: FieldElement, e: int) -> FieldElement:
    """a**e in F_p for e >= 0, with 0**0 = 1."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return FieldElement(pow(a.residue, e, a.modulus.value), a.modulus)


def _tonelli_shanks(v: int, n: int) -> int:
    # One square root of the residue v mod n; v nonzero and a square,
    # n = 1 (mod 4).  The n = 3 (mod 4) shortcut is taken by the caller.
    q = n - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while _jacobi(z, n) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, n), pow(v, q, n), pow(v, (q + 1) // 2, n)
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % n
            i += 1
        b = pow(c, 1 << (m - i - 1), n)
        m, c, t, r = i, b * b % n, t * b * b % n, r * b % n
    return r


def sqrt_mod(a: FieldElement) -> tuple[FieldElement, FieldElement] | None:
    """Both square roots of a in F_p, smaller residue first.

    Returns None when a is a non-residue; a = 0 yields (0, 0), the doubled
    single root.
    """
    p = a.modulus
    n = p.value
    v = a.residue
    if v == 0:
        zero = FieldElement(0, p)
        return (zero, zero)
    if _jacobi(v, n) != 1:
        return None
    if n % 4 == 3:
        r = pow(v, (n + 1) // 4, n)
    else:
        r = _tonelli_shanks(v, n)
    r = min(r, n - r)
    return (FieldElement(r, p), FieldElement(n - r, p))


@lru_cache(maxsize=512)
def canonical_i(p: Prime) -> FieldElement:
    """The smaller square root of -1 in F_p; requires p = 1 (mod 4)."""
    if p.value % 4 != 1:
        raise ValueError(f"-1 is a non-residue mod {p.value}; need p = 1 (mod 4)")
    roots = sqrt_mod(element(p, -1))
    assert roots is not None
    return roots[0]


@lru_cache(maxsize=512)
def canonical_sqrt2(p: Prime) -> FieldElement:
    """The smaller square root of 2 in F_p; requires p = +-1 (mod 8)."""
    if p.residue_class not in (1, 7):
        raise ValueError(f"2 is a non-residue mod {p.value}; need p = +-1 (mod 8)")
    roots = sqrt_mod(element(p, 2))
    assert roots is not None
    return roots[0]
