import pytest
from hypothesis import given, settings, strategies as st

from isogsieve.exactmath import (
    Factorization,
    FactorizationError,
    factorize,
    is_prime,
    isqrt,
    kronecker_symbol,
    primes_up_to,
    valuation,
)
from oracles import square_table_legendre, td_factor, td_is_prime


@pytest.mark.parametrize("n, expected", [(2, True), (163, True), (221, False), (0, False), (1, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_sieve_to_1e6():
    # the sieve itself is checked against trial division below
    table = set(primes_up_to(10**6))
    assert all(is_prime(n) == (n in table) for n in range(10**6 + 1))


def test_sieve_matches_trial_division():
    assert list(primes_up_to(20000)) == [n for n in range(20001) if td_is_prime(n)]


@pytest.mark.parametrize(
    "n",
    [
        2**61 - 1,
        2**89 - 1,
        (2**61 - 1) * (2**31 - 1),
        3215031751,  # strong pseudoprime to bases 2, 3, 5, 7
        3825123056546413051,  # strong pseudoprime to the first nine prime bases
        318665857834031151167461,  # strong pseudoprime to the first twelve prime bases
    ],
)
def test_is_prime_large(n):
    assert is_prime(n) == (n in (2**61 - 1, 2**89 - 1))


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(12).factors == ((2, 2), (3, 1))
    f = factorize(8131531262400)
    assert f.factors == ((2, 6), (3, 2), (5, 2), (7, 2), (13, 2), (19, 1), (37, 1), (97, 1))
    assert str(f) == "2^6 * 3^2 * 5^2 * 7^2 * 13^2 * 19 * 37 * 97"


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_beyond_trial_division():
    n = 1000003 * 1000033 * (2**31 - 1) ** 2
    f = factorize(n)
    assert f.factors == ((1000003, 1), (1000033, 1), (2**31 - 1, 2))
    assert f.product() == n


def test_factorize_resource_error():
    n = (2**61 - 1) * (2**89 - 1)
    with pytest.raises(FactorizationError):
        factorize(n, max_iter=1000, attempts=2)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 10**6))
def test_factorize_matches_trial_division(n):
    f = factorize(n)
    assert list(f.factors) == td_factor(n)
    assert f.product() == n
    primes = f.primes()
    assert primes == sorted(set(primes))
    assert all(td_is_prime(p) for p in primes)


def test_factorization_is_value_object():
    f = Factorization(12, ((2, 2), (3, 1)))
    assert f.as_dict() == {2: 2, 3: 1}
    assert str(Factorization(1, ())) == "1"


def test_kronecker_examples():
    assert kronecker_symbol(-163, 3) == -1
    assert kronecker_symbol(6, 3) == 0
    assert all(kronecker_symbol(1, n) == 1 for n in range(1, 200, 2))
    with pytest.raises(ValueError):
        kronecker_symbol(3, 0)


def test_kronecker_even_and_negative_moduli():
    # (a|2) = 0 for even a, 1 for a = +-1 mod 8, -1 for a = +-3 mod 8
    assert [kronecker_symbol(a, 2) for a in (1, 3, 5, 7, 2)] == [1, -1, -1, 1, 0]
    assert kronecker_symbol(-1, -1) == -1
    assert kronecker_symbol(5, -1) == 1
    assert kronecker_symbol(-3, 4) == 1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 23, 43, 97, 163, 229])
def test_kronecker_is_legendre_for_odd_primes(p):
    assert all(kronecker_symbol(a, p) == square_table_legendre(a, p) for a in range(-2 * p, 2 * p))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5, 7, 11, 37, 97, 163, 1009]), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_kronecker_multiplicative(p, a, b):
    assert kronecker_symbol(a, p) * kronecker_symbol(b, p) == kronecker_symbol(a * b, p)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10**6), st.integers(1, 10**6).filter(lambda n: n % 2))
def test_jacobi_reciprocity(m, n):
    # odd positive m, n coprime: (m|n)(n|m) = (-1)^((m-1)(n-1)/4)
    m = 2 * m + 1
    if kronecker_symbol(m, n) == 0:
        return
    sign = -1 if ((m - 1) // 2) * ((n - 1) // 2) % 2 else 1
    assert kronecker_symbol(m, n) * kronecker_symbol(n, m) == sign


def test_isqrt_examples():
    assert isqrt(0) == 0
    assert isqrt(12) == 3
    assert isqrt(4 * 5) == 4
    with pytest.raises(ValueError):
        isqrt(-1)


@given(st.integers(0, 10**40))
def test_isqrt_floor_property(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) ** 2


def test_valuation():
    assert valuation(2**6 * 3, 2) == 6
    assert valuation(-81, 3) == 4
    with pytest.raises(ValueError):
        valuation(0, 3)
