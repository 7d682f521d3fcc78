"""Elliptic curves over Q in long Weierstrass form.

Points are ``None`` (the point at infinity) or a pair of Fractions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactmath import factorize, is_prime, primes_up_to, valuation
from .intpoly import build_char_poly, build_power_poly, gcd_mod_p

INFINITY = None

# Coordinates beyond this many digits are treated as non-torsion.
HEIGHT_DIGIT_BUDGET = 200


class SingularCurveError(ValueError):
    pass


class BadReductionError(ValueError):
    pass


class NotOnCurveError(ValueError):
    pass


class ReductionType(str, enum.Enum):
    GOOD = "good"
    POTENTIALLY_GOOD_BAD = "potentially_good_bad"
    POTENTIALLY_MULTIPLICATIVE = "potentially_multiplicative"


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    b2: int = field(init=False)
    b4: int = field(init=False)
    b6: int = field(init=False)
    b8: int = field(init=False)
    c4: int = field(init=False)
    c6: int = field(init=False)
    disc: int = field(init=False)
    j: Fraction = field(init=False)

    def __post_init__(self):
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
        disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        if disc == 0:
            raise SingularCurveError(f"singular model {self.ainvs}: discriminant is 0")
        for name, val in dict(b2=b2, b4=b4, b6=b6, b8=b8, c4=c4, c6=c6, disc=disc).items():
            object.__setattr__(self, name, val)
        object.__setattr__(self, "j", Fraction(c4**3, disc))

    @property
    def ainvs(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __str__(self):
        return f"y^2 + {self.a1}xy + {self.a3}y = x^3 + {self.a2}x^2 + {self.a4}x + {self.a6}"


def curve_from_coeffs(a1: int, a2: int, a3: int, a4: int, a6: int) -> WeierstrassCurve:
    return WeierstrassCurve(int(a1), int(a2), int(a3), int(a4), int(a6))


def j_valuation(E: WeierstrassCurve, q: int) -> float | int:
    if E.j == 0:
        return float("inf")
    return valuation(E.j.numerator, q) - valuation(E.j.denominator, q)


def reduction_type(E: WeierstrassCurve, q: int) -> ReductionType:
    """Reduction type at q for the given model (not a minimal model)."""
    if E.disc % q:
        return ReductionType.GOOD
    if j_valuation(E, q) >= 0:
        return ReductionType.POTENTIALLY_GOOD_BAD
    return ReductionType.POTENTIALLY_MULTIPLICATIVE


@dataclass(frozen=True)
class TraceRecord:
    q: int
    count: int
    trace: int


@lru_cache(maxsize=4096)
def _quadratic_character(q: int) -> tuple[int, ...]:
    chi = [-1] * q
    chi[0] = 0
    for y in range(1, (q + 1) // 2):
        chi[y * y % q] = 1
    return tuple(chi)


def count_points(E: WeierstrassCurve, q: int) -> TraceRecord:
    """#E(F_q) and a_q = q + 1 - #E(F_q) for an odd prime q of good reduction.

    Completing the square turns the model into (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6,
    so each x contributes 1 + chi(rhs(x)) points.
    """
    if q == 2:
        raise ValueError("point counting at q = 2 is not supported")
    if reduction_type(E, q) is not ReductionType.GOOD:
        raise BadReductionError(f"q = {q} divides the discriminant")
    chi = _quadratic_character(q)
    b2, b4, b6 = E.b2 % q, 2 * E.b4 % q, E.b6 % q
    s = 0
    for x in range(q):
        s += chi[(((4 * x + b2) * x + b4) * x + b6) % q]
    count = q + 1 + s
    trace = -s
    assert trace * trace <= 4 * q, "Hasse bound violated"
    return TraceRecord(q, count, trace)


def is_on_curve(E: WeierstrassCurve, P) -> bool:
    if P is None:
        return True
    x, y = P
    return y * y + E.a1 * x * y + E.a3 * y == x**3 + E.a2 * x * x + E.a4 * x + E.a6


def _as_point(P):
    if P is None:
        return None
    return (Fraction(P[0]), Fraction(P[1]))


def negate_point(E: WeierstrassCurve, P):
    if P is None:
        return None
    x, y = _as_point(P)
    return (x, -y - E.a1 * x - E.a3)


def add_points(E: WeierstrassCurve, P, Q):
    P, Q = _as_point(P), _as_point(Q)
    for pt in (P, Q):
        if not is_on_curve(E, pt):
            raise NotOnCurveError(f"{pt} is not on {E}")
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 + y2 + E.a1 * x2 + E.a3 == 0:
            return None
        lam = (3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1) / (2 * y1 + E.a1 * x1 + E.a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
    y3 = -(lam + E.a1) * x3 - nu - E.a3
    return (x3, y3)


def multiply_point(E: WeierstrassCurve, P, n: int):
    if n < 0:
        return multiply_point(E, negate_point(E, P), -n)
    result, addend = None, _as_point(P)
    while n:
        if n & 1:
            result = add_points(E, result, addend)
        addend = add_points(E, addend, addend)
        n >>= 1
    return result


def _digits(P) -> int:
    x, y = P
    return max(len(str(abs(v.numerator))) + len(str(v.denominator)) for v in (x, y))


def point_order(E: WeierstrassCurve, P, cap: int = 16) -> int | None:
    """Order of P if it is at most ``cap``; None means the order exceeds the cap."""
    P = _as_point(P)
    if not is_on_curve(E, P):
        raise NotOnCurveError(f"{P} is not on {E}")
    R = P
    for n in range(1, cap + 1):
        if R is None:
            return n
        if _digits(R) > HEIGHT_DIGIT_BUDGET:
            return None
        R = add_points(E, R, P)
    return None


def _good_odd_primes(E: WeierstrassCurve, q_max: int, skip: int):
    for q in primes_up_to(q_max):
        if q != 2 and q != skip and E.disc % q:
            yield q


def isogeny_trace_test(E: WeierstrassCurve, p: int, q_max: int = 200) -> tuple[bool, list[TraceRecord]]:
    """Necessary condition for a rational p-isogeny from Frobenius traces.

    For each good odd prime q <= q_max other than p, X^2 - a_q X + q must
    have a root mod p, i.e. a_q^2 - 4q is a square mod p.  Returns the
    verdict and the trace records examined; on failure the last record is
    the first failing witness.  A True verdict is not a proof that an
    isogeny exists.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    records = []
    for q in _good_odd_primes(E, q_max, p):
        rec = count_points(E, q)
        records.append(rec)
        if p == 2:
            continue
        disc = (rec.trace * rec.trace - 4 * q) % p
        if disc and pow(disc, (p - 1) // 2, p) != 1:
            return False, records
    return True, records


def shared_root_test(E: WeierstrassCurve, p: int, s: int, q: int) -> bool:
    """Whether X^2 - a_q X + q and X^12 - q^s share a root mod p."""
    if q == p:
        raise ValueError("q must differ from p")
    if p == 2 or not is_prime(p):
        raise ValueError(f"p = {p} must be an odd prime")
    a_q = count_points(E, q).trace
    g = gcd_mod_p(build_char_poly(a_q, q).reduce(p), build_power_poly(q, s).reduce(p))
    return g.degree >= 1


def check_potential_good_everywhere(E: WeierstrassCurve, p: int) -> tuple[bool, list[int]]:
    """Primes outside {2, p} where j has negative valuation (none expected for a p-isogeny with p > 19)."""
    offenders = [q for q in factorize(E.j.denominator).primes() if q not in (2, p)]
    return not offenders, offenders
