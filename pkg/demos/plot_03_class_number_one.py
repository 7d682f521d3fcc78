"""
Signature 6 and class number one
================================

When s = 6, small odd primes q < p/4 must be inert in Q(sqrt(-p)); together
with a Minkowski bound below p/4 this forces class number one.  Here we
count reduced binary quadratic forms to get class numbers directly, and
compare with the inertness window.
"""

from isogsieve import class_number, minkowski_bound, verify_inertness_window
from isogsieve.exactmath import primes_up_to

print(class_number(23).reduced_forms)  # three classes
print(class_number(163).reduced_forms)  # only the principal form

heegner = [p for p in primes_up_to(10**4) if p > 19 and p % 4 == 3 and class_number(p).class_number == 1]
print("class number one, 19 < p <= 10^4:", heegner)

# The inertness window and class number one pick out the same primes.
window = [p for p in primes_up_to(500) if p > 19 and p % 4 == 3 and verify_inertness_window(p)]
print("inert window holds, 19 < p < 500:", window)

m = minkowski_bound(43)
print(f"2 sqrt(43)/pi in [{float(m.lower):.6f}, {float(m.upper):.6f}], below 43/4: {m.below_quarter_p}")
