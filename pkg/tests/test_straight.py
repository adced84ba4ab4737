import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from lcderham import straight
from lcderham.errors import CommutativityFailure
from lcderham.exactlin import Matrix, rank
from lcderham.monomial import bitmask, chambers, normalize_ideal, parse_ideal
from lcderham.straight import (d_action, eulerian_identity_holds, from_local_cohomology,
                               injective_hull, localization_module, x_action)

DATA = Path(__file__).parent / "data"


def dims_tuple(M):
    return tuple(M.dims[F] for F in chambers(M.n))


def test_from_local_cohomology_examples():
    M = from_local_cohomology(parse_ideal("x0,x1", 1), 2)
    assert dims_tuple(M) == (0, 0, 0, 1)
    for (F, i), u in M.u.items():
        assert u.rows == M.dims[F - {i}]

    M = from_local_cohomology(parse_ideal("x0", 1), 1)
    assert dims_tuple(M) == (0, 1, 0, 0)
    assert M.u[frozenset({0}), 0] == Matrix.zeros(0, 1)

    M = from_local_cohomology(parse_ideal("x0*x1", 1), 1)
    assert dims_tuple(M) == (0, 1, 1, 1)
    assert M.u[frozenset({0, 1}), 0] == Matrix.identity(1)
    assert M.u[frozenset({0, 1}), 1] == Matrix.identity(1)
    assert M.u[frozenset({0}), 0].shape == (0, 1)


def test_localization_examples():
    assert dims_tuple(localization_module((), 1)) == (1, 0, 0, 0)
    M = localization_module({0}, 0)
    assert dims_tuple(M) == (1, 1)
    assert M.u[frozenset({0}), 0] == Matrix.identity(1)
    assert dims_tuple(localization_module({0, 1}, 1)) == (1, 1, 1, 1)


def test_x_action_examples():
    RX = localization_module({0}, 0)
    assert x_action(RX, (-2,), 0) == Matrix.identity(1)
    H1 = from_local_cohomology(parse_ideal("x0", 1), 1)
    assert x_action(H1, (-1, 0), 0) == Matrix.zeros(0, 1)
    assert x_action(H1, (0, 0), 1) == Matrix.zeros(0, 0)


def test_d_action_examples():
    RX = localization_module({0}, 0)
    assert d_action(RX, (0,), 0) == Matrix.zeros(1, 1)
    assert d_action(RX, (-1,), 0) == Matrix.from_rows([[-1]])
    E = injective_hull(0)
    assert d_action(E, (-3,), 0) == Matrix.from_rows([[-3]])
    # d kills constants and lands in the chamber of 1/X
    assert d_action(E, (0,), 0).shape == (1, 0)


def test_commutativity_failure_is_raised():
    M = localization_module({0, 1}, 1)
    u = dict(M.u)
    u[frozenset({0, 1}), 0] = Matrix.from_rows([[2]])
    bad = straight.StraightModule(1, M.dims, u)
    with pytest.raises(CommutativityFailure):
        straight.check_commutativity(bad)


ideals = st.integers(0, 2).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.frozensets(st.integers(0, n), min_size=1), max_size=4)))


@given(ideals)
@settings(max_examples=60, deadline=None)
def test_eulerian_identity_on_every_chamber_probe(pair):
    I = normalize_ideal(pair[1], pair[0])
    for j in range(I.s + 1):
        ok, witness = eulerian_identity_holds(from_local_cohomology(I, j))
        assert ok, witness


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_localization_at_x0_is_bijective(n):
    for T in chambers(n):
        if 0 not in T:
            continue
        M = localization_module(T, n)
        for F in chambers(n):
            for a in straight.chamber_probes(F, n):
                m = x_action(M, a, 0)
                assert m.rows == m.cols and rank(m) == m.rows


@given(ideals, st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_dims_symmetric_under_variable_permutation(pair, rnd):
    n, gens = pair
    I = normalize_ideal(gens, n)
    perm = list(range(n + 1))
    rnd.shuffle(perm)
    J = normalize_ideal([frozenset(perm[i] for i in g) for g in I.gens], n)
    for j in range(I.s + 1):
        MI, MJ = from_local_cohomology(I, j), from_local_cohomology(J, j)
        for F in chambers(n):
            assert MI.dims[F] == MJ.dims[frozenset(perm[i] for i in F)]


def test_redundant_generator_does_not_change_dims():
    I = parse_ideal("x0*x1,x2", 2)
    J = normalize_ideal([{0: 1, 1: 1}, {2: 1}, {0: 1, 2: 1}], 2)
    assert I == J


GOLDEN = [("x0*x1", 1, 1, "h1_x0x1.json"),
          ("x0*x1,x1*x2,x0*x2", 2, 2, "h2_triangle.json"),
          ("x0,x1", 1, 2, "h2_max_n1.json")]


@pytest.mark.parametrize("text,n,j,name", GOLDEN)
def test_golden_serialization(text, n, j, name):
    M = from_local_cohomology(parse_ideal(text, n), j)
    golden = (DATA / name).read_text()
    assert straight.dumps(M) + "\n" == golden
    back = straight.loads(golden)
    assert back == M


def test_save_load_roundtrip(tmp_path):
    M = localization_module({0, 2}, 2)
    path = tmp_path / "m.json"
    straight.save(M, path)
    assert straight.load(path) == M
    d = json.loads(path.read_text())
    assert d["chambers"][str(bitmask({0, 2}))] == 1


def test_prime_field_module_matches_rational():
    I = parse_ideal("x0*x1,x1*x2,x0*x2", 2)
    for j in range(I.s + 1):
        assert (from_local_cohomology(I, j, 1000003).dims == from_local_cohomology(I, j).dims)
