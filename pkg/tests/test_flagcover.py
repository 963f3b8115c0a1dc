"""Multiplication of graded pieces, quantum minors and covering ranks."""
import pytest
from hypothesis import given, settings, strategies as st

from oracles import a1_products_cover, weyl_dimension
from qflag import flagcover
from qflag.flagcover import (MultMap, covering_rank, find_thresholds, mult_map, quantum_minor,
                             sharp_mult_surjectivity, verify_associativity, verify_classical_bridge,
                             verify_covering, verify_mult_map, verify_sigma_multiplicativity,
                             verify_w_mult_commutation)
from qflag.rootdata import build_root_datum

A1 = build_root_datum("A1")
A2 = build_root_datum("A2")
B2 = build_root_datum("B2")


def test_product_of_highest_vectors():
    X = mult_map(A1, (1,), (1,))
    A, B = X.source.factors
    assert X.product(A.unit_vector((1,)), B.unit_vector((1,))) == {(2,): [1]}
    assert X.rank() == 3 and X.target.dim == 3


def test_degree_zero_is_identity():
    X = mult_map(A2, (0, 0), (1, 1))
    A, B = X.source.factors
    for w in B.weights:
        for s in range(B.dims[w]):
            v = B.unit_vector(w, s)
            assert X.product(A.unit_vector((0, 0)), v) == v


@pytest.mark.parametrize("label, lam, mu, ell", [("A1", (1,), (2,), None), ("A2", (1, 0), (0, 1), 3),
                                                 ("B2", (1, 0), (0, 1), None), ("B2", (0, 1), (0, 1), 2)])
def test_mult_map_is_module_map(label, lam, mu, ell):
    datum = build_root_datum(label)
    X = mult_map(datum, lam, mu, ell)
    assert verify_mult_map(X).passed
    assert X.target.dim == weyl_dimension(label, datum.add(lam, mu))


def test_covering_rank_a1():
    c = covering_rank(A1, (2,), (1,))
    assert (c.per_w, c.total, c.target, c.covered) == ({"e": 3, "s1": 3}, 4, 4, True)


def test_quantum_minor_weights():
    assert quantum_minor(A1, (0,), (1,)) == {(-1,): [1]}
    w0 = A2.longest_element()
    assert set(quantum_minor(A2, w0.word, (1, 1))) == {(-1, -1)}


@pytest.mark.parametrize("mu", [1, 2, 3])
def test_a1_classical_covering_matches_monomial_oracle(mu):
    for lam in range(5):
        assert covering_rank(A1, (lam,), (mu,), 1).covered == a1_products_cover(lam, mu)


def test_a1_threshold_at_most_mu():
    res = verify_covering(A1, (1,), 1, 6)
    assert res.passed and res.data["thresholds"] == [[0]]
    assert verify_covering(A1, (3,), 1, 6).data["thresholds"] == [[2]]


def test_find_thresholds():
    out = {(0, 0): False, (1, 0): True, (0, 1): False, (1, 1): True, (2, 0): True, (0, 2): True,
           (2, 1): True, (1, 2): True, (2, 2): True}
    assert find_thresholds(out) == [(0, 2), (1, 0)]
    assert find_thresholds({(0,): False, (1,): False}) == []


def test_b2_ell_2_not_covered_at_zero():
    c = covering_rank(B2, (0, 0), (0, 1), 2)
    assert not c.covered and c.total < c.target


def test_sharp_surjectivity_a1():
    out = sharp_mult_surjectivity(A1, (0,), (3,), 3)
    assert (out["rank"], out["target"], out["surjective"]) == (2, 4, False)
    assert sharp_mult_surjectivity(A1, (2,), (3,), 3)["surjective"]
    with pytest.raises(ValueError):
        sharp_mult_surjectivity(A1, (0,), (2,), 3)
    with pytest.raises(ValueError):
        sharp_mult_surjectivity(A1, (0,), (3,), None)


@pytest.mark.parametrize("label, lam, mu, ell", [("A1", (1,), (2,), None), ("A2", (1, 0), (1, 1), None),
                                                 ("B2", (1, 0), (0, 1), 3), ("A1xA1", (1, 0), (1, 1), 2)])
def test_sigma_multiplicative(label, lam, mu, ell):
    assert verify_sigma_multiplicativity(build_root_datum(label), lam, mu, ell).passed


@pytest.mark.parametrize("ell", [None, 2, 3])
def test_w_mult_right_side(ell):
    assert verify_w_mult_commutation(A2, (1, 0), (0, 1), ell).passed
    assert verify_w_mult_commutation(B2, (0, 1), (1, 0), ell).passed


def test_w_mult_left_side_fails_generically():
    assert not verify_w_mult_commutation(A1, (1,), (1,), None, side="left").passed
    assert verify_w_mult_commutation(A1, (1,), (1,), 2, side="left").passed


@pytest.mark.parametrize("label, triple, ell", [("A1", ((1,), (1,), (1,)), None), ("A1", ((1,), (2,), (1,)), 3),
                                                ("A2", ((1, 0), (0, 1), (1, 0)), None),
                                                ("B2", ((1, 0), (0, 1), (1, 0)), 2)])
def test_associativity_with_triple_coproduct(label, triple, ell):
    res = verify_associativity(build_root_datum(label), *triple, ell=ell, direct=True)
    assert res.passed, res.failures


def test_associativity_detects_a_perturbed_product(monkeypatch):
    X = mult_map(A2, (1, 0), (0, 1))
    blocks = {w: (t, [list(row) for row in m]) for w, (t, m) in X.blocks.items()}
    nu = next(w for w, (_, m) in blocks.items() if len(m[0]) > 1)
    blocks[nu][1][0][1] = blocks[nu][1][0][1] + 1
    key = next(k for k, v in flagcover._MULT.items() if v is X)
    monkeypatch.setitem(flagcover._MULT, key, MultMap(X.source, X.target, blocks))
    assert not verify_associativity(A2, (1, 0), (0, 1), (1, 0), direct=False).passed


@pytest.mark.parametrize("label, lam, mu, ell", [("A2", (1, 0), (0, 1), 2), ("B2", (0, 1), (1, 0), 1),
                                                 ("A1", (2,), (1,), 2)])
def test_classical_bridge(label, lam, mu, ell):
    assert verify_classical_bridge(build_root_datum(label), lam, mu, ell).passed


@settings(max_examples=15)
@given(st.integers(0, 4), st.integers(1, 3), st.sampled_from([None, 1, 2, 3, 4]))
def test_a1_covering_is_monotone(lam, mu, ell):
    if covering_rank(A1, (lam,), (mu,), ell).covered:
        assert covering_rank(A1, (lam + 1,), (mu,), ell).covered
