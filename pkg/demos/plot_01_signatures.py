"""
Which isogeny signatures can occur
==================================

A rational p-isogeny carries a character on its kernel.  Restricted to
inertia at p, its 12th power is a power s of the cyclotomic character.
The table below lists every ramification index e and exponent r that can
occur, and the signature s = 12 r / e each one gives.
"""

from isogsieve import derive_signature_set, signature_allows_p

table = derive_signature_set()

for row in table.entries:
    print(f"e = {row.e}, r = {row.r}  ->  s = {row.s}")

# Pairs with e even and r odd are ruled out by a parity congruence.
for e, r, why in table.excluded:
    print(f"excluded (e, r) = ({e}, {r}): {why}")

print("admissible signatures:", table.admissible_s)

# Signature 6 only comes from (e, r) = (4, 2), and it needs p = 3 mod 4.
print("sources of s = 6:", table.sources(6))
print([p for p in (37, 41, 43, 67, 73, 163) if signature_allows_p(6, p)])
