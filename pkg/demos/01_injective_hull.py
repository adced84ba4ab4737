# The module E(K) = H^{n+1}_m(R) for the maximal ideal m = (x0, ..., xn).
#
# It lives entirely in the all-negative chamber, so its Koszul homology is a
# single copy of K in top homological degree and its de Rham homology a single
# copy of K in degree 0.

from lcderham import homology_tables, injective_hull, verify_main_theorem
from lcderham.homology import DERHAM, KOSZUL

for n in range(4):
    E = injective_hull(n)
    print("n = %d" % n)
    print("  nonzero chambers:", {tuple(sorted(F)): d for F, d in E.dims.items() if d})

    table = homology_tables(E)
    print("  Koszul  H_p:", table.dims(KOSZUL))
    print("  de Rham H_p:", table.dims(DERHAM))

    check = verify_main_theorem(E, table)
    print("  chi(X) = %d, chi(d) = %d, sign (-1)^(n+1) = %d -> %s"
          % (check.chi_koszul, check.chi_derham, (-1) ** (n + 1), check.status))
    print()
