# Localizations R_{X_T}: invert the variables in T.
#
# Whenever x_i is inverted, multiplication by x_i is bijective, so every
# Koszul strand is exact, and the de Rham Euler characteristic vanishes too.
# For n = 0 we look at K[x, 1/x] by hand first.

from lcderham import homology_tables, localization_module, verify_localized_vanishing
from lcderham.homology import DERHAM, KOSZUL
from lcderham.monomial import chambers

M = localization_module({0}, 0)
t = homology_tables(M)
print("K[x, 1/x]")
print("  Koszul  :", t.dims(KOSZUL) or "zero")
print("  de Rham :", t.dims(DERHAM), " (the class of 1 and the class of dx/x)")
print("  chi(d)  :", t.chi_derham)
print()

print("all T containing x0, up to four variables")
for n in range(4):
    for T in chambers(n):
        if 0 not in T:
            continue
        M = localization_module(T, n)
        status = verify_localized_vanishing(M, 0)
        print("  n=%d  T=%-14s %s" % (n, sorted(T), status))
