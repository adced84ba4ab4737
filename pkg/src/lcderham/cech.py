"""
Multidegree strands of the Cech complex on the generators f_1..f_s of a
squarefree monomial ideal.

In multidegree a the localization R_{f_T} (f_T = prod of f_t, t in T) has
a one-dimensional piece spanned by X^a exactly when every negative
coordinate of a is inverted, i.e. neg_support(a) is covered by the
supports of the generators in T.  So each strand is a complex of 0/1
dimensional spots indexed by subsets T of the generators.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from lcderham.exactlin import Matrix, homology_basis, induced_on_homology
from lcderham.monomial import neg_support, shift


def cech_sign(j, T):
    """(-1)^#{t in T : t < j}."""
    return -1 if sum(1 for t in T if t < j) % 2 else 1


@dataclass(frozen=True)
class CechStrand:
    a: tuple
    s: int
    basis: tuple          # basis[p] = tuple of generator-index subsets T, |T| = p
    differentials: tuple  # differentials[p]: C^p -> C^{p+1}
    prime: object = None

    def dim(self, p):
        return len(self.basis[p]) if 0 <= p <= self.s else 0


def _covered(I, F):
    def ok(T):
        cover = frozenset().union(*(I.gens[t] for t in T)) if T else frozenset()
        return F <= cover
    return ok


@lru_cache(maxsize=None)
def strand_complex(I, a, prime=None):
    a = tuple(a)
    F = neg_support(a)
    ok = _covered(I, F)
    s = I.s
    basis = tuple(tuple(T for T in combinations(range(s), p) if ok(T)) for p in range(s + 1))
    diffs = []
    for p in range(s):
        src, tgt = basis[p], basis[p + 1]
        index = {T: k for k, T in enumerate(tgt)}
        rows = [[0] * len(src) for _ in tgt]
        for c, T in enumerate(src):
            for j in range(s):
                if j in T:
                    continue
                U = tuple(sorted(T + (j,)))
                if U in index:
                    rows[index[U]][c] = cech_sign(j, T)
        diffs.append(Matrix(len(tgt), len(src), rows, prime))
    return CechStrand(a, s, basis, tuple(diffs), prime)


def _d_in(st, j):
    if j == 0:
        return Matrix.zeros(st.dim(0), 0, st.prime)
    return st.differentials[j - 1]


def _d_out(st, j):
    if j == st.s:
        return Matrix.zeros(0, st.dim(j), st.prime)
    return st.differentials[j]


@lru_cache(maxsize=None)
def strand_cohomology(I, a, prime=None):
    """{j: HomologyBasis} for j = 0..s; dims are dim H^j_I(R)_a."""
    st = strand_complex(I, tuple(a), prime)
    return {j: homology_basis(_d_in(st, j), _d_out(st, j)) for j in range(st.s + 1)}


def inclusion_map(src_basis, tgt_basis, prime=None):
    index = {T: k for k, T in enumerate(tgt_basis)}
    rows = [[0] * len(src_basis) for _ in tgt_basis]
    for c, T in enumerate(src_basis):
        if T in index:
            rows[index[T]][c] = 1
    return Matrix(len(tgt_basis), len(src_basis), rows, prime)


@lru_cache(maxsize=None)
def induced_x_map(I, a, i, j, prime=None):
    """Matrix of X_i: H^j(strand at a) -> H^j(strand at a + e_i)."""
    a = tuple(a)
    b = shift(a, i)
    src, tgt = strand_complex(I, a, prime), strand_complex(I, b, prime)
    f = inclusion_map(src.basis[j], tgt.basis[j], prime)
    return induced_on_homology(f, strand_cohomology(I, a, prime)[j], strand_cohomology(I, b, prime)[j])
