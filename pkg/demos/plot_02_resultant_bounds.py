"""
The resultant bounds R_{q,s}
============================

For a good auxiliary prime q, the Frobenius eigenvalue on the isogeny
kernel is a common root mod p of X^2 - aX + q (|a| <= 2 sqrt(q)) and
X^12 - q^s.  So p divides the resultant of the two polynomials, and hence
their lcm over the Hasse window.  We compute it for q = 3 and q = 5.
"""

from isogsieve import resultant_bound, surviving_primes

for q, s in [(3, 0), (5, 0), (3, 4)]:
    b = resultant_bound(q, s)
    print(f"R_{q},{s} = {b.value} = {b.factorization}")

# Individual resultants over the window a = -3..3 for q = 3:
for a, r in resultant_bound(3, 0).per_a:
    print(f"  a = {a:2d}: Res = {r}")

# Signatures s and 12 - s give the same primes away from q; the values
# differ by a power of q.
r0, r12 = resultant_bound(3, 0).value, resultant_bound(3, 12).value
print("R_3,12 / R_3,0 =", r12 // r0, "= 3^12:", r12 == 3**12 * r0)

# Signature 6 is different: X^2 - q divides X^12 - q^6, so the lcm is 0.
print("R_3,6 =", resultant_bound(3, 6).value)

# Intersecting primes above 19 for q = 3 and q = 5 leaves only 37.
print("q = 3 alone:", sorted(surviving_primes([3], 0)))
print("q = 3 and 5:", sorted(surviving_primes([3, 5], 0)))
print("s = 4:", sorted(surviving_primes([3, 5], 4)))
