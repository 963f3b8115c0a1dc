"""Root data, Weyl groups, the subset J and the rescaled datum."""
import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import positive_root_count, weyl_dimension
from qflag.rootdata import SUPPORTED_TYPES, bipartition_J, build_root_datum, sharp_datum, weyl_group

TYPES = ("A1", "A1xA1", "A2", "B2")


@pytest.fixture(params=TYPES)
def datum(request):
    return build_root_datum(request.param)


def test_cartan_and_d():
    assert build_root_datum("A1").cartan == ((2,),) and build_root_datum("A1").d == (1,)
    A2 = build_root_datum("A2")
    assert A2.cartan == ((2, -1), (-1, 2)) and A2.d == (1, 1)
    B2 = build_root_datum("B2")
    a = B2.cartan
    assert a[0][1] * a[1][0] == 2 and sorted(B2.d) == [1, 2]


def test_symmetrizable(datum):
    for i, j in itertools.product(datum.nodes, repeat=2):
        assert datum.d[i] * datum.cartan[i][j] == datum.d[j] * datum.cartan[j][i]


def test_unsupported_types():
    assert set(SUPPORTED_TYPES) >= set(TYPES)
    with pytest.raises(ValueError):
        build_root_datum("G2")
    with pytest.raises(ValueError):
        build_root_datum("C7")


@pytest.mark.parametrize("label, order", [("A1", 2), ("A1xA1", 4), ("A2", 6), ("B2", 8)])
def test_weyl_group_order(label, order):
    assert len(weyl_group(build_root_datum(label))) == order


def test_longest_words():
    A2 = build_root_datum("A2")
    w0 = A2.longest_element()
    assert len(w0.word) == 3 and A2.act(w0, (1, 0)) == (0, -1)
    assert w0.act((1, 0)) == (0, -1)
    assert build_root_datum("A1").act((0,), (3,)) == (-3,)
    assert A2.pair((1, 0), (0, 1)) == 0


def test_length_is_inversion_count(datum):
    for w in weyl_group(datum):
        assert w.length == datum.inversions(w)
        assert w.length == len(w.word)
    assert datum.longest_element().length == positive_root_count(datum.type_label)


def test_action_matrix_is_product_of_reflections(datum):
    for w in weyl_group(datum):
        for lam in itertools.product(range(-2, 3), repeat=datum.rank):
            cur = tuple(lam)
            for i in reversed(w.word):
                cur = datum.reflect(i, cur)
            assert w.act(lam) == cur


def test_braid_relations_on_reflections(datum):
    for i, j in itertools.combinations(datum.nodes, 2):
        m = {0: 2, 1: 3, 2: 4}[datum.cartan[i][j] * datum.cartan[j][i]]
        a = [i, j] * m
        b = [j, i] * m
        assert datum.element(a[:m]).act((3, 5)[:datum.rank]) == datum.element(b[:m]).act((3, 5)[:datum.rank])


def test_bipartition(datum):
    J = bipartition_J(datum)
    assert 0 in J
    for i, j in itertools.permutations(datum.nodes, 2):
        if datum.cartan[i][j] < 0:
            assert len(J & {i, j}) == 1


def test_sharp_examples():
    A1 = build_root_datum("A1")
    sd = sharp_datum(A1, 2)
    assert sd.r == 1 and sd.r_nodes == (1,) and sd.contains((1,))
    sd = sharp_datum(A1, 3)
    assert sd.r == 3 and sd.r_nodes == (3,)
    assert sd.contains((3,)) and not sd.contains((1,)) and not sd.contains((2,))
    assert sd.to_sharp((6,)) == (2,) and sd.from_sharp((2,)) == (6,)
    sd = sharp_datum(build_root_datum("B2"), 4)
    assert sd.r == 2 and sd.r_nodes == (2, 1)


@given(st.sampled_from(TYPES), st.integers(1, 8), st.lists(st.integers(-12, 12), min_size=2, max_size=2))
def test_sharp_lattice_invariant(label, ell, coords):
    datum = build_root_datum(label)
    sd = sharp_datum(datum, ell)
    lam = tuple(coords[:datum.rank])
    # lam in the rescaled lattice iff it pairs integrally with every alpha_i^vee / r_i
    assert sd.contains(lam) == all(x % r == 0 for x, r in zip(lam, sd.r_nodes))
    if sd.contains(lam):
        assert sd.from_sharp(sd.to_sharp(lam)) == lam


@given(st.sampled_from(TYPES), st.lists(st.integers(0, 6), min_size=2, max_size=2))
def test_weyl_dimension_matches_orthogonal_oracle(label, coords):
    datum = build_root_datum(label)
    lam = tuple(coords[:datum.rank])
    assert datum.weyl_dimension(lam) == weyl_dimension(label, lam)


@given(st.sampled_from(TYPES), st.lists(st.integers(-5, 5), min_size=2, max_size=2))
def test_weyl_orbit_contains_one_dominant(label, coords):
    datum = build_root_datum(label)
    lam = tuple(coords[:datum.rank])
    orbit = {w.act(lam) for w in weyl_group(datum)}
    assert sum(datum.is_dominant(mu) for mu in orbit) == 1
