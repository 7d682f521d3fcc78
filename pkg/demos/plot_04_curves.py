"""
Testing concrete curves
=======================

The curve y^2 = x^3 + 1 has the rational point (0, 1) of order 3, so it has
a rational 3-isogeny.  Its Frobenius traces then satisfy the necessary
condition mod 3.  For p = 23, which is not an isogeny degree over Q, the
same test rejects essentially every curve.
"""

import random

from isogsieve import (
    check_potential_good_everywhere,
    count_points,
    curve_from_coeffs,
    isogeny_trace_test,
    point_order,
    reduction_type,
)
from isogsieve.ecurve import SingularCurveError

E = curve_from_coeffs(0, 0, 0, 0, 1)
print("disc =", E.disc, " j =", E.j)
print("order of (0, 1):", point_order(E, (0, 1)))
print("traces:", [(r.q, r.trace) for r in (count_points(E, q) for q in (5, 7, 11, 13))])
print("3-isogeny test:", isogeny_trace_test(E, 3, 200)[0])
print("reduction at 3:", reduction_type(E, 3).value)

rng = random.Random(0)
rejected = total = 0
while total < 50:
    try:
        C = curve_from_coeffs(*(rng.randint(-5, 5) for _ in range(5)))
    except SingularCurveError:
        continue
    total += 1
    ok, records = isogeny_trace_test(C, 23, 200)
    rejected += not ok
print(f"p = 23: {rejected}/{total} random curves rejected")

# 11a has multiplicative reduction at 11: j has 11 in its denominator.
E11 = curve_from_coeffs(0, -1, 1, -10, -20)
print("j(11a) =", E11.j, check_potential_good_everywhere(E11, 37))
