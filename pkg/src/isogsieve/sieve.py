"""Isogeny signatures, the resultant bounds R_{q,s}, and the prime-degree sieve."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm

from .exactmath import Factorization, factorize, is_prime, isqrt, primes_up_to
from .intpoly import ADMISSIBLE_SIGNATURES, build_char_poly, build_power_poly, resultant
from .quadfield import class_number

RAMIFICATION_INDICES = (1, 2, 4, 6)


@dataclass(frozen=True)
class SignatureEntry:
    e: int
    r: int
    s: int


@dataclass(frozen=True)
class SignatureTable:
    entries: tuple[SignatureEntry, ...]
    excluded: tuple[tuple[int, int, str], ...]
    multiplicative: tuple[int, ...]
    admissible_s: tuple[int, ...]

    def sources(self, s: int) -> list[tuple[int, int]]:
        return [(x.e, x.r) for x in self.entries if x.s == s]


def derive_signature_set() -> SignatureTable:
    """Enumerate ramification data (e, r) and collect the signatures s = 12r/e.

    Pairs with e even and r odd are dropped, since ``a*e = r (mod p-1)``
    with p - 1 even forces r even.  The potentially multiplicative case
    acts on inertia through the trivial or cyclotomic character and
    contributes s in {0, 12}.
    """
    entries, excluded = [], []
    for e in RAMIFICATION_INDICES:
        for r in range(e + 1):
            if e % 2 == 0 and r % 2:
                excluded.append((e, r, "e even forces r even"))
                continue
            if (12 * r) % e:
                excluded.append((e, r, "12r/e not an integer"))
                continue
            entries.append(SignatureEntry(e, r, 12 * r // e))
    multiplicative = (0, 12)
    found = {x.s for x in entries} | set(multiplicative)
    return SignatureTable(tuple(entries), tuple(excluded), multiplicative, tuple(sorted(found)))


def signature_allows_p(s: int, p: int) -> bool:
    """Whether signature s is compatible with the prime p.

    Only s = 6 constrains p: it needs a solution of 4a = 2 (mod p-1),
    which exists iff gcd(4, p-1) divides 2.
    """
    if s not in ADMISSIBLE_SIGNATURES:
        raise ValueError(f"signature {s} not admissible")
    if s != 6:
        return True
    return 2 % gcd(4, p - 1) == 0


def hasse_window(q: int) -> range:
    """Integers a with a^2 <= 4q."""
    b = isqrt(4 * q)
    return range(-b, b + 1)


@dataclass(frozen=True)
class ResultantBound:
    q: int
    s: int
    value: int
    per_a: tuple[tuple[int, int], ...]
    factorization: Factorization | None

    def primes(self) -> list[int]:
        return self.factorization.primes() if self.factorization else []


def resultant_bound(q: int, s: int) -> ResultantBound:
    """R_{q,s}: lcm of |Res(X^2 - aX + q, X^12 - q^s)| over the Hasse window."""
    if q < 3 or not is_prime(q):
        raise ValueError(f"q = {q} must be an odd prime")
    power = build_power_poly(q, s)
    per_a = tuple((a, resultant(build_char_poly(a, q), power)) for a in hasse_window(q))
    if any(r == 0 for _, r in per_a):
        return ResultantBound(q, s, 0, per_a, None)
    value = lcm(*(abs(r) for _, r in per_a))
    return ResultantBound(q, s, value, per_a, factorize(value))


def surviving_primes(aux_primes, s: int, cutoff: int = 19) -> set[int]:
    """Primes p > cutoff outside aux_primes dividing R_{q,s} for every q in aux_primes."""
    if not aux_primes:
        raise ValueError("need at least one auxiliary prime")
    if s == 6:
        raise ValueError("signature 6 cannot be sieved: R_{q,6} = 0")
    survivors = None
    for q in aux_primes:
        bound = resultant_bound(q, s)
        if bound.value == 0:
            raise ValueError(f"R_{{{q},{s}}} = 0, cannot sieve")
        ps = {p for p in bound.primes() if p > cutoff}
        survivors = ps if survivors is None else survivors & ps
    return survivors - set(aux_primes)


@dataclass(frozen=True)
class SieveConfig:
    aux_primes: tuple[int, ...] = (3, 5)
    cutoff: int = 19
    class_search_ceiling: int = 10**4

    def __post_init__(self):
        object.__setattr__(self, "aux_primes", tuple(self.aux_primes))
        for q in self.aux_primes:
            if q < 3 or not is_prime(q):
                raise ValueError(f"auxiliary prime {q} must be an odd prime")
        if not self.aux_primes:
            raise ValueError("need at least one auxiliary prime")


@dataclass
class SieveReport:
    config: SieveConfig
    per_signature: dict[int, set[int]]
    final_list: list[int]
    bounds: dict[tuple[int, int], ResultantBound] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)


def heegner_branch(cutoff: int, ceiling: int) -> set[int]:
    """Primes cutoff < p <= ceiling, p = 3 mod 4, with Q(sqrt(-p)) of class number one."""
    return {
        p
        for p in primes_up_to(ceiling)
        if p > cutoff and signature_allows_p(6, p) and class_number(p).class_number == 1
    }


def mazur_prime_list(config: SieveConfig | None = None) -> SieveReport:
    config = config or SieveConfig()
    per_signature: dict[int, set[int]] = {}
    bounds = {}
    for s in ADMISSIBLE_SIGNATURES:
        if s == 6:
            per_signature[s] = heegner_branch(config.cutoff, config.class_search_ceiling)
            continue
        for q in config.aux_primes:
            bounds[(q, s)] = resultant_bound(q, s)
        per_signature[s] = surviving_primes(config.aux_primes, s, config.cutoff)

    final = set(primes_up_to(config.cutoff))
    for ps in per_signature.values():
        final |= ps

    warnings = [
        f"signature 6 branch examined only primes up to {config.class_search_ceiling}; "
        "larger primes are unexamined"
    ]
    if len(config.aux_primes) < 2:
        warnings.append("a single auxiliary prime is insufficient: spurious survivors are likely")
    return SieveReport(config, per_signature, sorted(final), bounds, warnings)
