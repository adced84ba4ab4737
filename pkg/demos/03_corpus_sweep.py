# Sweep every squarefree monomial ideal in up to four variables.
#
# For each ideal I and each j we build H^j_I(R) from the Cech strands,
# compute both Euler characteristics and check the sign relation.  The
# alternating sums over j must also come out to 1 and (-1)^(n+1): the Cech
# complex has Euler characteristic equal to that of R, whose two values are
# exactly those numbers.

import time
from collections import Counter

from lcderham import from_local_cohomology, verify_main_theorem
from lcderham.corpus import enumerate_ideals
from lcderham.monomial import format_ideal

for v in (1, 2, 3, 4):
    t0 = time.perf_counter()
    ideals = enumerate_ideals(v)
    verdicts = Counter()
    for I in ideals:
        add_k = add_d = 0
        for j in range(I.s + 1):
            c = verify_main_theorem(from_local_cohomology(I, j))
            verdicts[c.status] += 1
            add_k += (-1) ** j * c.chi_koszul
            add_d += (-1) ** j * c.chi_derham
        assert (add_k, add_d) == (1, (-1) ** v), format_ideal(I)
    print("v=%d  ideals=%-4d modules: %s  (%.2fs)"
          % (v, len(ideals), dict(verdicts), time.perf_counter() - t0))

# a closer look at one ideal: the triangle x0x1, x1x2, x0x2
I = enumerate_ideals(3)[-1]
print("\nI = (%s)" % format_ideal(I))
for j in range(I.s + 1):
    c = verify_main_theorem(from_local_cohomology(I, j))
    print("  H^%d: chi(X)=%d chi(d)=%d" % (j, c.chi_koszul, c.chi_derham))
