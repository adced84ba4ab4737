from itertools import product

from hypothesis import given, settings, strategies as st

from lcderham.cech import induced_x_map, strand_cohomology, strand_complex
from lcderham.exactlin import Matrix, rank
from lcderham.monomial import chamber_rep, neg_support, normalize_ideal, parse_ideal


def dims(I, a):
    return {j: hb.h for j, hb in strand_cohomology(I, tuple(a)).items()}


def test_strand_examples():
    I = parse_ideal("x0", 0)
    st_ = strand_complex(I, (-1,))
    assert (st_.dim(0), st_.dim(1)) == (0, 1)
    assert st_.differentials[0].shape == (1, 0)
    st_ = strand_complex(I, (0,))
    assert (st_.dim(0), st_.dim(1)) == (1, 1)
    assert st_.differentials[0] == Matrix.identity(1)

    I = parse_ideal("x0*x1,x1*x2,x0*x2", 2)
    st_ = strand_complex(I, (-1, -1, -1))
    assert [st_.dim(p) for p in range(4)] == [0, 0, 3, 1]


def test_strand_cohomology_examples():
    assert dims(parse_ideal("x0", 0), (-1,)) == {0: 0, 1: 1}
    assert dims(parse_ideal("x0,x1", 1), (-1, -1)) == {0: 0, 1: 0, 2: 1}
    assert dims(parse_ideal("x0*x1", 1), (0, -1)) == {0: 0, 1: 1}


def test_induced_x_map_examples():
    assert induced_x_map(parse_ideal("x0*x1", 1), (-1, -1), 0, 1) == Matrix.identity(1)
    assert induced_x_map(parse_ideal("x0", 1), (-1, 0), 0, 1) == Matrix.zeros(0, 1)


ideals = st.integers(0, 2).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.frozensets(st.integers(0, n), min_size=1), max_size=4)))


def build(pair):
    n, gens = pair
    return normalize_ideal(gens, n)


degrees = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


@given(ideals, degrees)
@settings(max_examples=150, deadline=None)
def test_complex_condition_and_euler_characteristic(pair, a):
    I = build(pair)
    a = tuple(a[:I.n + 1])
    st_ = strand_complex(I, a)
    for p in range(I.s - 1):
        assert (st_.differentials[p + 1] @ st_.differentials[p]).is_zero()
    h = dims(I, a)
    assert sum((-1) ** j * d for j, d in h.items()) == sum((-1) ** p * st_.dim(p) for p in range(I.s + 1))


@given(ideals, degrees)
@settings(max_examples=150, deadline=None)
def test_dims_depend_only_on_chamber(pair, a):
    I = build(pair)
    a = tuple(a[:I.n + 1])
    assert dims(I, a) == dims(I, chamber_rep(neg_support(a), I.n))


@given(ideals, degrees, st.integers(0, 2))
@settings(max_examples=150, deadline=None)
def test_straightness_probe(pair, a, i):
    I = build(pair)
    a = tuple(a[:I.n + 1])
    i = i % (I.n + 1)
    if a[i] == -1:
        return
    for j in range(I.s + 1):
        m = induced_x_map(I, a, i, j)
        assert m.rows == m.cols and rank(m) == m.rows


def test_chamber_unchanged_gives_identity():
    I = parse_ideal("x0*x1,x2", 2)
    for a in [(0, -2, 1), (2, -1, -3)]:
        for j in range(I.s + 1):
            m = induced_x_map(I, a, 0, j)
            assert m == Matrix.identity(m.rows)


def test_top_cohomology_of_maximal_ideal_is_socle_only():
    I = parse_ideal("x0,x1,x2", 2)
    for a in product(range(-2, 2), repeat=3):
        expect = 1 if all(x <= -1 for x in a) else 0
        assert dims(I, a)[3] == expect
