# Brute-force check of the chamber model.
#
# Inside the box [-B, B]^{n+1} we write down monomial bases for the Cech
# spots, literal x_i and d_i matrices, and compute local cohomology and
# Koszul / de Rham homology by plain linear algebra.  Only degrees at
# distance < B from the boundary are trusted.

from lcderham import from_local_cohomology, parse_ideal
from lcderham.oracle import build_box, cross_check, eulerian_check, weyl_relations_check

I = parse_ideal("x0*x1", 1)
box = build_box(I, 4)
print("box radius 4, %d basis monomials across %d Cech spots" % (len(box.global_basis()), len(box.spots)))

print("Weyl relations:", weyl_relations_check(box).status)
print("Euler operator:", eulerian_check(box).status)

for j in range(I.s + 1):
    M = from_local_cohomology(I, j)
    verdict = cross_check(M, box, j)
    print("H^%d  oracle %s  (%d strands checked, %d skipped)"
          % (j, verdict.status, verdict.checked, verdict.skipped))
