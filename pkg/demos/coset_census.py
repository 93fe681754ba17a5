"""Which coset of SL2 inside ESL2 holds the square roots of each element?

For every A in SL2(F_p) the roots are found by brute force, then sorted into
four buckets. For simple split A the bucket is predicted by whether tr A + 2 and
tr A - 2 are squares, and the census confirms the prediction.
"""

import sys

from eslroots.oracle import audit_coset_distribution

primes = [int(a) for a in sys.argv[1:]] or [3, 5, 7, 11]

print(f"{'p':>3} {'both':>6} {'sl-only':>8} {'minus-only':>11} {'none':>6} {'total':>6}  mismatches")
for p in primes:
    t = audit_coset_distribution(p)
    c = t.counts
    print(f"{p:>3} {c['both']:>6} {c['sl-only']:>8} {c['minus-only']:>11} {c['none']:>6} {t.total:>6}  {len(t.mismatches)}")
