"""
Brute-force realization of Cech modules on a finite multidegree box.

Every spot R_{f_T} of the Cech complex is truncated to the monomials X^a
with a in [-B, B]^{n+1}; X_i and d_i are literal sparse matrices
(X_i X^a = X^{a+e_i}, d_i X^a = a_i X^{a-e_i}), with entries dropped once
the image leaves the box.  Nothing here uses chambers or straightness:
local cohomology pieces, the action on them and both homologies are
computed from explicit cycle bases.  Only degrees in the interior
[-B+1, B-1]^{n+1} are trusted; anything touching the rim is skipped.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product

from lcderham.errors import BoxTooLarge, ComplexViolation, OutsideInterior
from lcderham.exactlin import Matrix, homology_basis, rank
from lcderham.homology import DERHAM, KOSZUL, homology_tables
from lcderham.monomial import chamber_rep, zdegree

log = logging.getLogger(__name__)

DEFAULT_SIZE_CAP = 5000


@dataclass
class BoxRealization:
    n: int
    radius: int
    spots: tuple    # (T, support, cech degree)
    basis: tuple    # basis[k]: exponent tuples of spot k, lexicographic
    index: tuple    # index[k]: exponent tuple -> position
    x_ops: list     # x_ops[k][i]: {col: (row, coeff)}
    d_ops: list     # d_ops[k][i]: {col: (row, coeff)}
    top: int        # highest cech degree
    ideal: object = None
    prime: object = None
    _cache: dict = field(default_factory=dict, repr=False)

    def in_interior(self, a):
        r = self.radius - 1
        return all(-r <= x <= r for x in a)

    def spot_of(self, T):
        return self._labels[T]

    def global_basis(self):
        """All (a, T) pairs in the fixed order: lexicographic on a, then T."""
        return sorted((a, T) for (T, _, _), b in zip(self.spots, self.basis) for a in b)


def check_box_size(n, B, cap=DEFAULT_SIZE_CAP):
    if B < 2:
        raise ValueError("box radius must be at least 2")
    size = (n + 1) * (2 * B + 1) ** (n + 1)
    if size > cap:
        raise BoxTooLarge("box of radius %d in %d variables has size %d > cap %d"
                          % (B, n + 1, size, cap))


def _make_box(n, B, spots, ideal, prime, cap):
    check_box_size(n, B, cap)
    pts = list(product(range(-B, B + 1), repeat=n + 1))
    basis, index, x_ops, d_ops = [], [], [], []
    for T, supp, _ in spots:
        b = tuple(a for a in pts if all(x >= 0 or i in supp for i, x in enumerate(a)))
        ix = {a: k for k, a in enumerate(b)}
        xs, ds = [], []
        for i in range(n + 1):
            xo, do = {}, {}
            for col, a in enumerate(b):
                up = a[:i] + (a[i] + 1,) + a[i + 1:]
                if up in ix:
                    xo[col] = (ix[up], 1)
                down = a[:i] + (a[i] - 1,) + a[i + 1:]
                if a[i] != 0 and down in ix:
                    do[col] = (ix[down], a[i])
            xs.append(xo)
            ds.append(do)
        basis.append(b)
        index.append(ix)
        x_ops.append(xs)
        d_ops.append(ds)
    top = max(p for _, _, p in spots)
    box = BoxRealization(n, B, tuple(spots), tuple(basis), tuple(index), x_ops, d_ops,
                         top, ideal, prime)
    box._labels = {T: k for k, (T, _, _) in enumerate(spots)}
    return box


def build_box(I, B, prime=None, cap=DEFAULT_SIZE_CAP):
    spots = []
    for p in range(I.s + 1):
        for T in combinations(range(I.s), p):
            supp = frozenset().union(*(I.gens[t] for t in T)) if T else frozenset()
            spots.append((T, supp, p))
    return _make_box(I.n, B, spots, I, prime, cap)


def build_localization_box(T, n, B, prime=None, cap=DEFAULT_SIZE_CAP):
    """R_{X_T} as a one-spot complex sitting in degree 0."""
    return _make_box(n, B, [((), frozenset(T), 0)], None, prime, cap)


def _members(box, b, p):
    return [k for k, (T, _, q) in enumerate(box.spots) if q == p and b in box.index[k]]


def _cech_block(box, b, p):
    src, tgt = _members(box, b, p), _members(box, b, p + 1)
    pos = {box.spots[k][0]: r for r, k in enumerate(tgt)}
    rows = [[0] * len(src) for _ in tgt]
    for c, k in enumerate(src):
        T = box.spots[k][0]
        for g in range(box.top):
            if g in T:
                continue
            U = tuple(sorted(T + (g,)))
            if U in pos:
                sign = (-1) ** sum(1 for t in T if t < g)
                rows[pos[U]][c] = sign
    return Matrix(len(tgt), len(src), rows, box.prime)


def box_cohomology_basis(box, j, b):
    key = ("H", j, b)
    if key not in box._cache:
        d_in = (_cech_block(box, b, j - 1) if j > 0
                else Matrix.zeros(len(_members(box, b, 0)), 0, box.prime))
        d_out = _cech_block(box, b, j)
        box._cache[key] = (_members(box, b, j), homology_basis(d_in, d_out))
    return box._cache[key]


def box_cohomology_strand(box, j, a):
    a = tuple(a)
    if not box.in_interior(a):
        raise OutsideInterior("degree %r outside interior of radius-%d box" % (a, box.radius))
    return box_cohomology_basis(box, j, a)[1].h


def _operator_block(box, j, b, i, kind):
    """Literal X_i (kind 'x') or d_i (kind 'd') from degree b to its image degree, cech spot j."""
    step = 1 if kind == "x" else -1
    c = b[:i] + (b[i] + step,) + b[i + 1:]
    src, tgt = _members(box, b, j), _members(box, c, j)
    pos = {k: r for r, k in enumerate(tgt)}
    ops = box.x_ops if kind == "x" else box.d_ops
    rows = [[0] * len(src) for _ in tgt]
    for col, k in enumerate(src):
        hit = ops[k][i].get(box.index[k][b])
        if hit is not None and k in pos:
            row, coeff = hit
            assert box.basis[k][row] == c
            rows[pos[k]][col] = coeff
    return Matrix(len(tgt), len(src), rows, box.prime)


def _strand_degrees(cls, t, n):
    sgn = -1 if cls == KOSZUL else 1
    return {S: tuple(t[k] + sgn * (k in S) for k in range(n + 1))
            for p in range(n + 2) for S in combinations(range(n + 1), p)}


def strand_in_interior(box, cls, t):
    return all(box.in_interior(b) for b in _strand_degrees(cls, t, box.n).values())


def box_homology_strand(box, j, cls, t):
    """{p: dim H_p} of the Koszul or de Rham strand at t of H^j, by brute force."""
    n = box.n
    t = tuple(t)
    degs = _strand_degrees(cls, t, n)
    if not all(box.in_interior(b) for b in degs.values()):
        raise OutsideInterior("strand at %r leaves the interior" % (t,))
    kind = "x" if cls == KOSZUL else "d"
    hb = {S: box_cohomology_basis(box, j, b)[1] for S, b in degs.items()}
    by_p = [[S for S in degs if len(S) == p] for p in range(n + 2)]
    diffs = [None]
    for p in range(1, n + 2):
        roff, off = {}, 0
        for S in by_p[p - 1]:
            roff[S] = off
            off += hb[S].h
        width = sum(hb[S].h for S in by_p[p])
        rows = [[0] * width for _ in range(off)]
        col = 0
        for S in by_p[p]:
            for pos, i in enumerate(S):
                Sp = S[:pos] + S[pos + 1:]
                op = _operator_block(box, j, degs[S], i, kind)
                block = hb[Sp].project @ op @ hb[S].representatives
                sign = (-1) ** pos
                for r in range(block.rows):
                    for c in range(block.cols):
                        if block[r, c] != 0:
                            rows[roff[Sp] + r][col + c] += sign * block[r, c]
            col += hb[S].h
        diffs.append(Matrix(off, width, rows, box.prime))
    for p in range(2, n + 2):
        if not (diffs[p - 1] @ diffs[p]).is_zero():
            raise ComplexViolation("box %s strand at %r is not a complex" % (cls, t))
    ranks = [0] + [rank(diffs[p]) for p in range(1, n + 2)] + [0]
    dims = {p: sum(hb[S].h for S in by_p[p]) for p in range(n + 2)}
    return {p: dims[p] - ranks[p] - ranks[p + 1] for p in range(n + 2)}


@dataclass(frozen=True)
class Verdict:
    status: str
    detail: str = ""
    checked: int = 0
    skipped: int = 0

    @property
    def ok(self):
        return self.status == "PASS"

    def to_dict(self):
        return {"status": self.status, "detail": self.detail,
                "checked": self.checked, "skipped": self.skipped}


def _apply(ops, col):
    hit = ops.get(col)
    return hit if hit is not None else (None, 0)


def eulerian_check(box):
    """eps X^a = |a| X^a on every interior monomial, and on cohomology representatives."""
    checked = 0
    for k, b in enumerate(box.basis):
        for col, a in enumerate(b):
            if not box.in_interior(a):
                continue
            acc = {}
            for i in range(box.n + 1):
                row, c1 = _apply(box.d_ops[k][i], col)
                if row is None:
                    continue
                row2, c2 = _apply(box.x_ops[k][i], row)
                if row2 is not None:
                    acc[row2] = acc.get(row2, 0) + c1 * c2
            acc = {r: v for r, v in acc.items() if v != 0}
            want = {col: zdegree(a)} if zdegree(a) else {}
            checked += 1
            if acc != want:
                return Verdict("FAIL", "spot %r, monomial %r: eps gives %r" % (box.spots[k][0], a, acc),
                               checked)
    for j in range(box.top + 1):
        for b in product((-1, 0), repeat=box.n + 1):
            _, hb = box_cohomology_basis(box, j, b)
            if hb.h == 0:
                continue
            reps = hb.representatives
            eps = Matrix.zeros(reps.rows, reps.rows, box.prime)
            for i in range(box.n + 1):
                down = b[:i] + (b[i] - 1,) + b[i + 1:]
                eps = eps + _operator_block(box, j, down, i, "x") @ _operator_block(box, j, b, i, "d")
            checked += 1
            if eps @ reps != reps.scale(zdegree(b)):
                return Verdict("FAIL", "H^%d representative at %r not eigen for eps" % (j, b), checked)
    return Verdict("PASS", "", checked)


def _vec_apply(ops, vec):
    out = {}
    for col, v in vec.items():
        hit = ops.get(col)
        if hit is not None:
            row, c = hit
            out[row] = out.get(row, 0) + c * v
    return {r: v for r, v in out.items() if v != 0}


def _vec_sub(u, v):
    out = dict(u)
    for k, x in v.items():
        out[k] = out.get(k, 0) - x
    return {k: x for k, x in out.items() if x != 0}


def weyl_relations_check(box):
    """[X_i, X_j] = 0, [d_i, d_j] = 0, [d_i, X_j] = delta_ij on interior monomials."""
    n = box.n
    checked = 0
    for k, b in enumerate(box.basis):
        X, D = box.x_ops[k], box.d_ops[k]
        for col, a in enumerate(b):
            if not box.in_interior(a):
                continue
            e = {col: 1}
            for i in range(n + 1):
                for j in range(n + 1):
                    xx = _vec_sub(_vec_apply(X[i], _vec_apply(X[j], e)), _vec_apply(X[j], _vec_apply(X[i], e)))
                    dd = _vec_sub(_vec_apply(D[i], _vec_apply(D[j], e)), _vec_apply(D[j], _vec_apply(D[i], e)))
                    dx = _vec_sub(_vec_apply(D[i], _vec_apply(X[j], e)), _vec_apply(X[j], _vec_apply(D[i], e)))
                    want = e if i == j else {}
                    checked += 1
                    if xx or dd or dx != want:
                        return Verdict("FAIL", "spot %r, monomial %r, pair (%d, %d)"
                                       % (box.spots[k][0], a, i, j), checked)
    return Verdict("PASS", "", checked)


def predicted_support(cls, n):
    return (0,) * (n + 1) if cls == KOSZUL else (-1,) * (n + 1)


def cross_check(M, box, j, table=None):
    """Compare the chamber pipeline for M = H^j against the box realization."""
    n = M.n
    if n != box.n:
        raise ValueError("module and box live in different polynomial rings")
    if not all(box.in_interior(a) for a in product((-2, 1), repeat=n + 1)):
        raise OutsideInterior("box interior must contain {-2..1}^%d" % (n + 1))
    checked = skipped = 0
    for F, d in M.dims.items():
        got = box_cohomology_strand(box, j, chamber_rep(F, n))
        checked += 1
        if got != d:
            return Verdict("FAIL", "chamber %r: dim %d vs box %d" % (sorted(F), d, got), checked, skipped)
    if table is None:
        table = homology_tables(M)
    for cls in (KOSZUL, DERHAM):
        recorded = {}
        for e in table.of(cls):
            recorded[e.t, e.p] = e.dim
        for t in product((-1, 0), repeat=n + 1):
            box_dims = box_homology_strand(box, j, cls, t)
            checked += 1
            for p, dim in box_dims.items():
                if recorded.get((t, p), 0) != dim:
                    return Verdict("FAIL", "%s H_%d at t=%r: table %d vs box %d"
                                   % (cls, p, t, recorded.get((t, p), 0), dim), checked, skipped)
        support = predicted_support(cls, n)
        for t in product(range(-2, 2), repeat=n + 1):
            if t == support:
                continue
            if not strand_in_interior(box, cls, t):
                log.info("skipping %s strand at %r: leaves box interior", cls, t)
                skipped += 1
                continue
            box_dims = box_homology_strand(box, j, cls, t)
            checked += 1
            if any(box_dims.values()):
                return Verdict("FAIL", "%s strand at %r not exact: %r" % (cls, t, box_dims),
                               checked, skipped)
    return Verdict("PASS", "", checked, skipped)
