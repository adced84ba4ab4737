"""Enumeration of squarefree monomial ideals (antichains of variable supports)."""

import random

from lcderham.monomial import SquarefreeIdeal, _minimal, from_bitmask

MAX_GENERATORS = 6


def _antichains(masks, start, chosen):
    yield tuple(chosen)
    for k in range(start, len(masks)):
        m = masks[k]
        if any(m & c == c or m & c == m for c in chosen):
            continue
        chosen.append(m)
        yield from _antichains(masks, k + 1, chosen)
        chosen.pop()


def exhaustive_ideals(v):
    """Every squarefree monomial ideal in v variables, the zero ideal first."""
    n = v - 1
    masks = list(range(1, 1 << v))
    out = []
    for chain in _antichains(masks, 0, []):
        gens = _minimal(from_bitmask(m) for m in chain)
        out.append(SquarefreeIdeal(n, gens))
    out.sort(key=lambda I: (I.s, [sorted(g) for g in I.gens]))
    return out


def sampled_ideals(v, count=100, seed=0, max_gens=MAX_GENERATORS):
    """``count`` distinct nonzero ideals drawn with a fixed seed, in draw order."""
    rng = random.Random(seed)
    n = v - 1
    full = (1 << v) - 1
    seen, out = set(), []
    while len(out) < count:
        k = rng.randint(1, max_gens)
        masks = rng.sample(range(1, full + 1), k)
        I = SquarefreeIdeal(n, _minimal(from_bitmask(m) for m in masks))
        if I in seen:
            continue
        seen.add(I)
        out.append(I)
    return out


def enumerate_ideals(v, sample=None, seed=0):
    """Exhaustive corpus for v <= 4; a seeded sample (default 100) otherwise."""
    if sample is None and v <= 4:
        return exhaustive_ideals(v)
    return sampled_ideals(v, 100 if sample is None else sample, seed)
