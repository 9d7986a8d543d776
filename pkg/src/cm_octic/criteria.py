"""Per-prime verification of the quadratic-character criteria.

For p = 1 (mod 8), write p = a^2 + b^2 (a odd, b even > 0, a + b = 1 mod 4)
and p = c^2 + 8*d^2 (c, d > 0), let n = #E(F_p) = (a-1)^2 + b^2 for
E: y^2 = x^3 - x, and let chi = (1 + sqrt(2) | p) via Euler's criterion.
Each certificate independently evaluates:

  curve criterion    chi = +1  <=>  n = 0 (mod 32)
  parity corollary   n = 0 (mod 32)  <=>  d even
  class-number chain chi = +1  <=>  d even  <=>  h(-4p) = 0 (mod 8)

A proof trace additionally walks the structural argument behind the curve
criterion: preimages under eta of the rational points with x = +-1 +- sqrt(2),
and the eta-orbit of a point of order 8 when 32 | n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classnumber import DEFAULT_CAP, class_number
from .curve import (
    affine,
    curve_order,
    eta_apply,
    eta_level_sets,
    eta_preimages,
    find_point_of_order,
)
from .decompose import curve_order_from_two_squares, eight_decomposition, two_squares
from .errors import InvariantViolation
from .modular import FieldElement, Prime, canonical_sqrt2, element, jacobi, pow_mod, sqrt_mod


def euler_symbol(u: FieldElement) -> int:
    """Euler's criterion: u^((p-1)/2) resolved into {-1, 0, +1}."""
    if u.residue == 0:
        return 0
    e = pow_mod(u, (u.modulus.value - 1) // 2).residue
    if e == 1:
        return 1
    if e == u.modulus.value - 1:
        return -1
    raise InvariantViolation(f"Euler's criterion returned {e} mod {u.modulus.value}")


def chi_one_plus_sqrt2(p: Prime) -> int:
    """The quadratic character of 1 + sqrt(2) mod p, for p = 1 (mod 8).

    Well defined: replacing sqrt(2) by its negative multiplies the argument
    by the square (1 - sqrt2)/(1 + sqrt2)... more directly, the product of
    the two symbols is (-1 | p) = +1, so both roots give the same value.
    """
    if p.residue_class != 1:
        raise ValueError(f"chi is defined for p = 1 (mod 8), got {p.value}")
    u = canonical_sqrt2(p) + 1
    if u.residue == 0:
        raise InvariantViolation(f"1 + sqrt(2) vanished mod {p.value}")
    return euler_symbol(u)


@dataclass(frozen=True)
class Certificate:
    """One prime's verdict on all three criteria.

    h, thm1_holds are None when the class number was not computed.
    """

    p: int
    a: int
    b: int
    c: int
    d: int
    chi: int
    n: int
    n_mod_32: int
    h: int | None
    thm2_holds: bool
    thm1_holds: bool | None
    corollary_holds: bool

    def __post_init__(self) -> None:
        if self.n != (self.a - 1) ** 2 + self.b * self.b:
            raise InvariantViolation(f"n != (a-1)^2 + b^2 at p={self.p}")
        if self.n % 8:
            raise InvariantViolation(f"#E(F_p) = {self.n} is not divisible by 8 at p={self.p}")

    @property
    def all_hold(self) -> bool:
        return self.thm2_holds and self.corollary_holds and self.thm1_holds is not False


@dataclass(frozen=True)
class ErrorCertificate:
    """A stage failure for one prime; carries which computation broke."""

    p: int
    stage: str
    message: str


def check_prime(
    p: Prime, with_class_number: bool = False, class_number_cap: int = DEFAULT_CAP
) -> Certificate | ErrorCertificate:
    """Evaluate every criterion at p, each side computed independently."""
    if p.residue_class != 1:
        raise ValueError(f"check_prime expects p = 1 (mod 8), got {p.value}")
    try:
        ts = two_squares(p)
        n = curve_order_from_two_squares(ts)
    except InvariantViolation as exc:
        return ErrorCertificate(p=p.value, stage="two_squares", message=str(exc))
    try:
        e8 = eight_decomposition(p)
    except InvariantViolation as exc:
        return ErrorCertificate(p=p.value, stage="eight_decomposition", message=str(exc))
    try:
        chi = chi_one_plus_sqrt2(p)
    except InvariantViolation as exc:
        return ErrorCertificate(p=p.value, stage="chi", message=str(exc))
    h: int | None = None
    if with_class_number:
        try:
            h = class_number(p, cap=class_number_cap)
        except InvariantViolation as exc:
            return ErrorCertificate(p=p.value, stage="class_number", message=str(exc))
    n_mod_32 = n % 32
    d_even = e8.d % 2 == 0
    thm2 = (chi == 1) == (n_mod_32 == 0)
    corollary = (n_mod_32 == 0) == d_even
    thm1 = None
    if h is not None:
        thm1 = ((chi == 1) == d_even) and (d_even == (h % 8 == 0))
    return Certificate(
        p=p.value,
        a=ts.a,
        b=ts.b,
        c=e8.c,
        d=e8.d,
        chi=chi,
        n=n,
        n_mod_32=n_mod_32,
        h=h,
        thm2_holds=thm2,
        thm1_holds=thm1,
        corollary_holds=corollary,
    )


@dataclass(frozen=True)
class LevelFourFiber:
    """The rational points above one candidate x in {+-1 +- sqrt(2)}."""

    x: int
    x_is_square: bool
    points: tuple[tuple[int, int], ...]
    preimage_counts: tuple[int, ...]


@dataclass(frozen=True)
class ProofTrace:
    """A structural walk of the curve criterion at one prime.

    jac_identity: (1+sqrt2 | p) * (1-sqrt2 | p) agrees with (-1 | p) = +1.
    preimage direction: with chi = +1 every rational point over the level-4
    x-values has eta-preimages and 32 | n; with chi = -1 those preimage sets
    are all empty.  order-8 direction: whenever 32 | n a point of order 8
    exists and eta or eta^2 sends it to an x in the level-4 set which is a
    square.  consistent = all of the above.
    """

    p: int
    chi: int
    chi_conjugate: int
    minus_one_symbol: int
    jac_identity_holds: bool
    n: int
    n_mod_32: int
    level4_x: tuple[int, ...]
    fibers: tuple[LevelFourFiber, ...]
    preimage_direction_holds: bool
    order8_applicable: bool
    order8_point: tuple[int, int] | None
    orbit_x: tuple[int, int] | None
    orbit_landed_x: int | None
    orbit_landed_is_square: bool | None
    order8_direction_holds: bool
    consistent: bool


def proof_trace(p: Prime, seed: int = 0) -> ProofTrace:
    """Trace both directions of the curve criterion at p.

    Never raises on a mathematical inconsistency: a trace that breaks is
    returned with consistent=False so callers can surface it as a
    counterexample.
    """
    if p.residue_class != 1:
        raise ValueError(f"proof_trace expects p = 1 (mod 8), got {p.value}")
    chi = chi_one_plus_sqrt2(p)
    s = canonical_sqrt2(p)
    chi_conjugate = euler_symbol(1 - s)
    minus_one = jacobi(-1, p)
    jac_ok = chi * chi_conjugate == minus_one == 1
    n = curve_order(p)
    levels = eta_level_sets(p)
    level4 = tuple(sorted(x.residue for x in levels.level(4)))

    fibers = []
    preimage_ok = True
    for xr in level4:
        xe = element(p, xr)
        roots = sqrt_mod(xe * xe * xe - xe)
        pts: list[tuple[int, int]] = []
        counts: list[int] = []
        if roots is not None:
            for yr in sorted({roots[0].residue, roots[1].residue}):
                Q = affine(xe, element(p, yr))
                cnt = len(eta_preimages(Q))
                pts.append((xr, yr))
                counts.append(cnt)
                if chi == 1:
                    preimage_ok = preimage_ok and cnt > 0
                else:
                    preimage_ok = preimage_ok and cnt == 0
        fibers.append(
            LevelFourFiber(
                x=xr,
                x_is_square=jacobi(xr, p) == 1,
                points=tuple(pts),
                preimage_counts=tuple(counts),
            )
        )
    if chi == 1:
        preimage_ok = preimage_ok and n % 32 == 0

    applicable = n % 32 == 0
    order8_point = orbit_x = landed = None
    landed_sq: bool | None = None
    order8_ok = True
    if applicable:
        P = find_point_of_order(p, 8, seed=seed)
        if P is None:
            order8_ok = False  # 32 | n guarantees one; counterexample if missing
        else:
            Q1 = eta_apply(P)
            Q2 = eta_apply(Q1)
            order8_point = (P.x.residue, P.y.residue)
            x1 = None if Q1.is_infinity else Q1.x.residue
            x2 = None if Q2.is_infinity else Q2.x.residue
            orbit_x = (x1, x2)
            landed = x1 if x1 in level4 else (x2 if x2 in level4 else None)
            if landed is None:
                order8_ok = False
            else:
                landed_sq = jacobi(landed, p) == 1
                order8_ok = landed_sq
    return ProofTrace(
        p=p.value,
        chi=chi,
        chi_conjugate=chi_conjugate,
        minus_one_symbol=minus_one,
        jac_identity_holds=jac_ok,
        n=n,
        n_mod_32=n % 32,
        level4_x=level4,
        fibers=tuple(fibers),
        preimage_direction_holds=preimage_ok,
        order8_applicable=applicable,
        order8_point=order8_point,
        orbit_x=orbit_x,
        orbit_landed_x=landed,
        orbit_landed_is_square=landed_sq,
        order8_direction_holds=order8_ok,
        consistent=jac_ok and preimage_ok and order8_ok,
    )
