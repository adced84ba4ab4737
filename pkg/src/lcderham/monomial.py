"""
Variables, multidegrees, chambers and squarefree monomial ideals.

A multidegree is a tuple of n+1 integers.  Its chamber is the set of
coordinates that are negative; chambers are frozensets of variable
indices and are ordered by their bitmask (bit i set iff i is in F).

Ideal text syntax: comma separated monomials such as ``x0*x1*x2`` or
``x0^2*x1``; case and whitespace are ignored, ``""`` is the zero ideal.
"""

import re
from dataclasses import dataclass
from itertools import product

from lcderham.errors import NotSquarefree, ParseError, UnitIdeal


def neg_support(a):
    return frozenset(i for i, x in enumerate(a) if x <= -1)


def bitmask(F):
    m = 0
    for i in F:
        m |= 1 << i
    return m


def from_bitmask(mask):
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def chambers(n):
    """All chambers of {0..n} in binary-counter order."""
    return [from_bitmask(m) for m in range(1 << (n + 1))]


def chamber_rep(F, n):
    return tuple(-1 if i in F else 0 for i in range(n + 1))


def zdegree(a):
    return sum(a)


def unit(i, n):
    return tuple(int(k == i) for k in range(n + 1))


def shift(a, i, k=1):
    return a[:i] + (a[i] + k,) + a[i + 1:]


def box_points(lo, hi, n):
    return list(product(range(lo, hi + 1), repeat=n + 1))


def _gen_key(g):
    return tuple(sorted(g))


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Squarefree monomial ideal of K[X_0..X_n], stored by generator supports.

    ``radicalized`` records that some input generator had an exponent > 1.
    """

    n: int
    gens: tuple
    radicalized: bool = False

    @property
    def s(self):
        return len(self.gens)

    @property
    def nvars(self):
        return self.n + 1

    def __str__(self):
        return format_ideal(self)

    def __eq__(self, other):
        if not isinstance(other, SquarefreeIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.n, self.gens))


def _minimal(supports):
    supports = sorted(set(supports), key=lambda g: (len(g), _gen_key(g)))
    keep = []
    for g in supports:
        if not any(h <= g for h in keep):
            keep.append(g)
    return tuple(sorted(keep, key=_gen_key))


def normalize_ideal(raw_gens, n, strict=False):
    """Radical of the monomial ideal generated by ``raw_gens``.

    Each raw generator is a mapping {variable: exponent} or an exponent
    sequence of length n+1.  Non-minimal and duplicate supports are dropped.
    """
    supports = []
    radicalized = False
    for g in raw_gens:
        if isinstance(g, SquarefreeIdeal):
            raise TypeError("pass generators, not an ideal")
        if hasattr(g, "items"):
            exps = dict(g)
        elif isinstance(g, (frozenset, set)):
            exps = {i: 1 for i in g}
        else:
            g = tuple(g)
            if len(g) != n + 1:
                raise ParseError("exponent vector %r has length %d, expected %d" % (g, len(g), n + 1))
            exps = dict(enumerate(g))
        for i, e in exps.items():
            if not 0 <= i <= n:
                raise ParseError("variable x%d outside x0..x%d" % (i, n))
            if e < 0:
                raise ParseError("negative exponent in generator %r" % (g,))
            if e > 1:
                radicalized = True
        supp = frozenset(i for i, e in exps.items() if e > 0)
        if not supp:
            raise UnitIdeal("a constant generator makes I the unit ideal")
        supports.append(supp)
    if radicalized and strict:
        raise NotSquarefree("non-squarefree generator given in strict mode")
    return SquarefreeIdeal(n, _minimal(supports), radicalized)


def ideal_from_supports(supports, n):
    return normalize_ideal([frozenset(g) for g in supports], n)


_MONO = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text, n):
    text = re.sub(r"\s+", "", text.lower())
    if not text:
        raise ParseError("empty monomial")
    exps = {}
    for factor in text.split("*"):
        if re.fullmatch(r"\d+", factor):
            if int(factor) == 0:
                raise ParseError("zero is not a monomial generator")
            continue
        m = _MONO.match(factor)
        if m is None:
            raise ParseError("cannot parse factor %r" % factor)
        i = int(m.group(1))
        e = int(m.group(2) or 1)
        if i > n:
            raise ParseError("variable x%d outside x0..x%d" % (i, n))
        exps[i] = exps.get(i, 0) + e
    return exps


def parse_ideal(text, n, strict=False):
    text = re.sub(r"\s+", "", text)
    if not text or text in ("0", "()", "(0)"):
        return SquarefreeIdeal(n, ())
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return normalize_ideal([parse_monomial(t, n) for t in text.split(",")], n, strict)


def format_monomial(g):
    return "*".join("x%d" % i for i in sorted(g))


def format_ideal(I):
    if not I.gens:
        return "0"
    return ",".join(format_monomial(g) for g in I.gens)


def maximal_ideal(n):
    return SquarefreeIdeal(n, tuple(frozenset([i]) for i in range(n + 1)))
