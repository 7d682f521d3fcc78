"""Dense univariate polynomials over Z and over prime fields.

Coefficients are stored low degree first: ``coeffs[i]`` multiplies ``X**i``.
The zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

ADMISSIBLE_SIGNATURES = (0, 4, 6, 8, 12)


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int] = ()):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial([x + y for x, y in zip(a, b)])

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __divmod__(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Exact division over Z; raises if a quotient coefficient is not integral."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        lc, dg = other.leading, other.degree
        for k in range(len(quot) - 1, -1, -1):
            c, r = divmod(rem[k + dg], lc)
            if r:
                raise ValueError("quotient is not integral")
            quot[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] -= c * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def reduce(self, p: int) -> ModPolynomial:
        return ModPolynomial(p, self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or i == 0) else ""
            if body and mono:
                body += "*"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body + mono))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out


@dataclass(frozen=True)
class ModPolynomial:
    modulus: int
    coeffs: tuple[int, ...]

    def __init__(self, modulus: int, coeffs: Sequence[int] = ()):
        if modulus < 2:
            raise ValueError("modulus must be a prime")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", _strip(c % modulus for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: ModPolynomial) -> None:
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} != {other.modulus}")

    def monic(self) -> ModPolynomial:
        if self.is_zero():
            return self
        inv = pow(self.leading, -1, self.modulus)
        return ModPolynomial(self.modulus, [c * inv for c in self.coeffs])

    def __sub__(self, other: ModPolynomial) -> ModPolynomial:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return ModPolynomial(self.modulus, [x - y for x, y in zip(a, b)])

    def __mul__(self, other: ModPolynomial) -> ModPolynomial:
        self._check(other)
        if self.is_zero() or other.is_zero():
            return ModPolynomial(self.modulus)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ModPolynomial(self.modulus, out)

    def __divmod__(self, other: ModPolynomial) -> tuple[ModPolynomial, ModPolynomial]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.modulus
        rem = list(self.coeffs)
        dg = other.degree
        inv = pow(other.leading, -1, p)
        quot = [0] * max(len(rem) - dg, 0)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + dg] * inv % p
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] = (rem[k + i] - c * b) % p
        return ModPolynomial(p, quot), ModPolynomial(p, rem)

    def __mod__(self, other: ModPolynomial) -> ModPolynomial:
        return divmod(self, other)[1]


def gcd_mod_p(f: ModPolynomial, g: ModPolynomial) -> ModPolynomial:
    """Monic gcd over the prime field."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    fr = list(reversed(f.coeffs))
    gr = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fr + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (size - n - 1 - i))
    return rows


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) as the determinant of the Sylvester matrix (fraction-free Bareiss)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant with the zero polynomial is undefined")
    if f.degree == 0:
        return f.leading**g.degree
    if g.degree == 0:
        return g.leading**f.degree
    return _bareiss_det(sylvester_matrix(f, g))


def build_char_poly(a: int, q: int) -> IntPolynomial:
    """X^2 - a X + q, the Frobenius characteristic polynomial shape."""
    return IntPolynomial([q, -a, 1])


def build_power_poly(q: int, s: int) -> IntPolynomial:
    """X^12 - q^s."""
    if s not in ADMISSIBLE_SIGNATURES:
        raise ValueError(f"signature {s} not in {ADMISSIBLE_SIGNATURES}")
    return IntPolynomial([-(q**s)] + [0] * 11 + [1])
