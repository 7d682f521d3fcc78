"""Imaginary quadratic fields Q(sqrt(-p)) for primes p = 3 (mod 4)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import isqrt, kronecker_symbol, primes_up_to

# Rational enclosure of pi, 30 decimal places.
_PI_NUM = 3141592653589793238462643383279
_PI_LO = Fraction(_PI_NUM, 10**30)
_PI_HI = Fraction(_PI_NUM + 1, 10**30)


def _require_3_mod_4(p: int) -> None:
    if p < 3 or p % 4 != 3:
        raise ValueError(f"p = {p} must be a prime congruent to 3 mod 4")


@dataclass(frozen=True)
class QuadFormClassData:
    p: int
    discriminant: int
    reduced_forms: tuple[tuple[int, int, int], ...]

    @property
    def class_number(self) -> int:
        return len(self.reduced_forms)


def class_number(p: int) -> QuadFormClassData:
    """Class data for discriminant -p by enumerating reduced forms (a, b, c).

    b runs over odd b >= 1 with b^2 <= p/3; each factorization
    (b^2 + p)/4 = a*c with b <= a <= c gives (a, b, c), plus (a, -b, c)
    when neither boundary case applies.
    """
    _require_3_mod_4(p)
    forms = []
    b = 1
    while 3 * b * b <= p:
        m = (b * b + p) // 4
        a = b
        while a * a <= m:
            if m % a == 0:
                c = m // a
                forms.append((a, b, c))
                if b < a < c:
                    forms.append((a, -b, c))
            a += 1
        b += 2
    forms.sort()
    return QuadFormClassData(p, -p, tuple(forms))


def is_inert(q: int, p: int) -> bool:
    """True iff the odd prime q stays prime in Q(sqrt(-p))."""
    if q == 2:
        raise ValueError("q = 2 is outside the inertness window")
    if q == p:
        raise ValueError("q = p ramifies")
    return kronecker_symbol(-p, q) == -1


def inertness_window(p: int) -> list[tuple[int, int]]:
    """(q, (-p|q)) for each odd prime q with 2 < q < p/4."""
    _require_3_mod_4(p)
    return [(q, kronecker_symbol(-p, q)) for q in primes_up_to((p - 1) // 4) if q > 2 and 4 * q < p]


def verify_inertness_window(p: int) -> bool:
    return all(sym == -1 for _, sym in inertness_window(p))


@dataclass(frozen=True)
class MinkowskiBound:
    p: int
    lower: Fraction
    upper: Fraction
    below_quarter_p: bool

    def __float__(self) -> float:
        return float((self.lower + self.upper) / 2)


def minkowski_bound(p: int) -> MinkowskiBound:
    """Rational enclosure of 2*sqrt(p)/pi and the decision 2*sqrt(p)/pi < p/4."""
    _require_3_mod_4(p)
    target = Fraction(p, 4)
    for digits in range(4, 30):
        scale = 10**digits
        r = isqrt(p * scale * scale)
        sqrt_lo = Fraction(r, scale)
        sqrt_hi = Fraction(r + 1, scale)
        lo = 2 * sqrt_lo / _PI_HI
        hi = 2 * sqrt_hi / _PI_LO
        if hi < target:
            return MinkowskiBound(p, lo, hi, True)
        if lo >= target:
            return MinkowskiBound(p, lo, hi, False)
    raise ArithmeticError("Minkowski comparison undecided at available precision")
