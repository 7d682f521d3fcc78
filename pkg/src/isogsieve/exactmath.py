"""Exact integer arithmetic: primality, factorization, Kronecker symbols."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm  # noqa: F401  re-exported for the rest of the package

TRIAL_DIVISION_LIMIT = 10**6
MR_ROUNDS_LARGE = 40

# Deterministic Miller-Rabin witnesses: correct for every n < 3.3e24.
_MR_BASES_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981
_PREFILTER = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


class FactorizationError(ArithmeticError):
    """Raised when a composite cofactor resists the configured factoring effort."""


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def product(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


@lru_cache(maxsize=None)
def primes_up_to(n: int) -> tuple[int, ...]:
    """All primes <= n (sieve of Eratosthenes)."""
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _PREFILTER:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_BOUND:
        return all(_mr_round(n, d, s, a) for a in _MR_BASES_SMALL)
    rng = random.Random(n)
    return all(_mr_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(MR_ROUNDS_LARGE))


def _brent(n: int, c: int, max_iter: int) -> int | None:
    """One Pollard rho run with Brent's cycle detection; returns a nontrivial factor or None."""
    y, m, g, r, q = 2, 128, 1, 1, 1
    x = ys = y
    f = lambda v: (v * v + c) % n  # noqa: E731
    steps = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = f(y)
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = f(y)
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
        steps += r
        if steps > max_iter:
            return None
    if g == n:
        while True:
            ys = f(ys)
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _split(n: int, max_iter: int, attempts: int) -> int:
    if n % 2 == 0:
        return 2
    r = math.isqrt(n)
    if r * r == n:
        return r
    for c in range(1, attempts + 1):
        d = _brent(n, c, max_iter)
        if d is not None:
            return d
    raise FactorizationError(f"could not split cofactor {n}")


def factorize(n: int, max_iter: int = 2_000_000, attempts: int = 20) -> Factorization:
    """Complete prime factorization of ``n >= 1``.

    Trial division by primes below ``TRIAL_DIVISION_LIMIT`` is followed by
    Pollard rho (Brent variant, seeds c = 1, 2, ...) on whatever cofactor
    remains.  If a cofactor cannot be split within ``attempts`` runs of
    ``max_iter`` steps a :class:`FactorizationError` is raised; a partial
    answer is never returned.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    counts: dict[int, int] = {}
    m = n
    for p in primes_up_to(TRIAL_DIVISION_LIMIT):
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        c = stack.pop()
        if is_prime(c):
            counts[c] = counts.get(c, 0) + 1
            continue
        d = _split(c, max_iter, attempts)
        stack.extend((d, c // d))
    return Factorization(n, tuple(sorted(counts.items())))


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for n != 0."""
    if n == 0:
        raise ValueError("kronecker_symbol undefined for n = 0")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a|n), n odd positive
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
