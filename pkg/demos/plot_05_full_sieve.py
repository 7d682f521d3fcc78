"""
The complete list of prime degrees
==================================

Put the pieces together: every prime up to 19, the survivors of the
resultant sieve for s in {0, 4, 8, 12}, and the class-number-one primes of
the signature-6 branch.
"""

from isogsieve import SieveConfig, mazur_prime_list

report = mazur_prime_list()
for s, ps in sorted(report.per_signature.items()):
    print(f"s = {s:2d}: {sorted(ps)}")
print("final list:", report.final_list)
for w in report.warnings:
    print("warning:", w)

# One auxiliary prime is not enough: 97 survives with q = 3 alone.
print(mazur_prime_list(SieveConfig(aux_primes=(3,))).final_list)
