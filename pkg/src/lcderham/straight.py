"""
Chamber representation of Z^{n+1}-graded modules over the Weyl algebra.

A StraightModule stores one space V_F per chamber F (given by its
dimension) and, for i in F, the crossing map u[F, i]: V_F -> V_{F - {i}}.
The graded pieces are M_a = V_{neg_support(a)}.  X_i acts as the identity
inside a chamber and as u across a_i = -1 -> 0; d_i acts on M_a as the
scalar a_i (zero when a_i = 0).  With this action every homogeneous z
satisfies eps z = |z| z, eps = sum X_i d_i.
"""

import json
from dataclasses import dataclass, field
from itertools import product

from lcderham import cech
from lcderham.errors import CommutativityFailure, ShapeMismatch
from lcderham.exactlin import Matrix
from lcderham.monomial import (bitmask, chamber_rep, chambers, from_bitmask,
                               format_monomial, maximal_ideal, neg_support, shift,
                               zdegree)


@dataclass(frozen=True)
class StraightModule:
    n: int
    dims: dict                      # chamber -> dimension, binary-counter order
    u: dict                         # (chamber, i) -> Matrix V_F -> V_{F-{i}}
    provenance: str = ""
    prime: object = None
    meta: dict = field(default_factory=dict, compare=False)

    def dim(self, F):
        return self.dims[frozenset(F)]

    def total_dim(self):
        return sum(self.dims.values())

    def chamber_dims_by_mask(self):
        return {bitmask(F): d for F, d in self.dims.items()}


def check_commutativity(M):
    """Raise CommutativityFailure unless u_{F-i,j} u_{F,i} = u_{F-j,i} u_{F,j}."""
    for F in M.dims:
        for i in sorted(F):
            u = M.u[F, i]
            if u.shape != (M.dims[F - {i}], M.dims[F]):
                raise ShapeMismatch("u[%s, %d] has shape %r" % (sorted(F), i, u.shape))
        for i in sorted(F):
            for j in sorted(F):
                if j <= i:
                    continue
                left = M.u[F - {i}, j] @ M.u[F, i]
                right = M.u[F - {j}, i] @ M.u[F, j]
                if left != right:
                    raise CommutativityFailure(
                        "crossings %d and %d do not commute at chamber %s" % (i, j, sorted(F)))


def from_local_cohomology(I, j, prime=None):
    """The module H^j_I(R) in chamber form."""
    if not 0 <= j <= I.s:
        raise ValueError("cohomological degree %d outside [0, %d]" % (j, I.s))
    n = I.n
    dims, u = {}, {}
    for F in chambers(n):
        a = chamber_rep(F, n)
        dims[F] = cech.strand_cohomology(I, a, prime)[j].h
        for i in sorted(F):
            u[F, i] = cech.induced_x_map(I, a, i, j, prime)
    M = StraightModule(n, dims, u, "H^%d_I(R), I = (%s)" % (j, I), prime,
                       {"kind": "local_cohomology", "j": j, "ideal": str(I)})
    check_commutativity(M)
    return M


def localization_module(T, n, prime=None):
    """R localized at the product of the variables in T."""
    T = frozenset(T)
    dims, u = {}, {}
    for F in chambers(n):
        dims[F] = 1 if F <= T else 0
    for F in chambers(n):
        for i in sorted(F):
            u[F, i] = Matrix.identity(1, prime) if dims[F] else Matrix.zeros(dims[F - {i}], 0, prime)
    name = "R" if not T else "R_{%s}" % format_monomial(T)
    M = StraightModule(n, dims, u, name, prime, {"kind": "localization", "T": sorted(T)})
    check_commutativity(M)
    return M


def injective_hull(n, prime=None):
    """E(K)-type module: top local cohomology of R at the maximal ideal."""
    M = from_local_cohomology(maximal_ideal(n), n + 1, prime)
    return StraightModule(M.n, M.dims, M.u, "E(K) = H^%d_m(R)" % (n + 1), prime, M.meta)


def x_action(M, a, i):
    """X_i: M_a -> M_{a+e_i}."""
    F = neg_support(a)
    if a[i] != -1:
        return Matrix.identity(M.dims[F], M.prime)
    return M.u[F, i]


def d_action(M, a, i):
    """d_i: M_a -> M_{a-e_i}."""
    F = neg_support(a)
    if a[i] != 0:
        return Matrix.identity(M.dims[F], M.prime).scale(a[i])
    return Matrix.zeros(M.dims[F | {i}], M.dims[F], M.prime)


def euler_operator(M, a):
    """Matrix of eps = sum_i X_i d_i on M_a."""
    d = M.dims[neg_support(a)]
    out = Matrix.zeros(d, d, M.prime)
    for i in range(M.n + 1):
        out = out + x_action(M, shift(a, i, -1), i) @ d_action(M, a, i)
    return out


def chamber_probes(F, n, depth=2):
    """Multidegrees with negative support F, coordinates in [-depth, depth-1]."""
    ranges = [range(-depth, 0) if i in F else range(0, depth) for i in range(n + 1)]
    return list(product(*ranges))


def eulerian_identity_holds(M, depth=2):
    """True iff eps acts as |a| on every chamber probe (first failure otherwise)."""
    for F in M.dims:
        for a in chamber_probes(F, M.n, depth):
            eps = euler_operator(M, a)
            if eps != Matrix.identity(M.dims[F], M.prime).scale(zdegree(a)):
                return False, a
    return True, None


def to_dict(M):
    return {
        "n": M.n,
        "provenance": M.provenance,
        "field": "Q" if M.prime is None else M.prime,
        "chambers": {str(bitmask(F)): d for F, d in M.dims.items()},
        "u": [
            {"chamber": bitmask(F), "var": i, "shape": list(m.shape), "matrix": m.to_strings()}
            for (F, i), m in sorted(M.u.items(), key=lambda kv: (bitmask(kv[0][0]), kv[0][1]))
        ],
        "meta": M.meta,
    }


def from_dict(d):
    n = d["n"]
    prime = None if d["field"] == "Q" else int(d["field"])
    dims = {F: 0 for F in chambers(n)}
    for k, v in d["chambers"].items():
        dims[from_bitmask(int(k))] = v
    u = {}
    for e in d["u"]:
        r, c = e["shape"]
        u[from_bitmask(e["chamber"]), e["var"]] = Matrix(r, c, e["matrix"], prime)
    M = StraightModule(n, dims, u, d.get("provenance", ""), prime, d.get("meta", {}))
    check_commutativity(M)
    return M


def dumps(M):
    return json.dumps(to_dict(M), indent=1)


def loads(text):
    return from_dict(json.loads(text))


def save(M, path):
    with open(path, "w") as f:
        f.write(dumps(M) + "\n")


def load(path):
    with open(path) as f:
        return loads(f.read())
