"""Computational skeleton of the prime-degree isogeny classification over Q."""

from .ecurve import (
    INFINITY,
    ReductionType,
    TraceRecord,
    WeierstrassCurve,
    add_points,
    check_potential_good_everywhere,
    count_points,
    curve_from_coeffs,
    isogeny_trace_test,
    point_order,
    reduction_type,
    shared_root_test,
)
from .exactmath import Factorization, FactorizationError, factorize, is_prime, isqrt, kronecker_symbol
from .intpoly import IntPolynomial, ModPolynomial, build_char_poly, build_power_poly, gcd_mod_p, resultant
from .quadfield import QuadFormClassData, class_number, is_inert, minkowski_bound, verify_inertness_window
from .sieve import (
    ResultantBound,
    SieveConfig,
    SieveReport,
    SignatureTable,
    derive_signature_set,
    mazur_prime_list,
    resultant_bound,
    signature_allows_p,
    surviving_primes,
)

MAZUR_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 37, 43, 67, 163)

__version__ = "0.1.0"
