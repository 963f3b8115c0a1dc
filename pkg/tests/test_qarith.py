"""Scalar layer: q-integers, cyclotomic polynomials, fields and DVR lattices."""
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qflag.qarith import (CycloNum, DvrScalar, LaurentPoly, Place, RatFunc, cyclotomic_poly,
                          dvr_lattice_basis, field_for, q_binomial, q_factorial, q_integer, residue,
                          valuation, verify_arithmetic)
from qflag.qarith.checks import random_dvr_matrix

q = LaurentPoly.q()
Q = RatFunc.q()


def phi(ell):
    return RatFunc(cyclotomic_poly(ell))


# -- values -------------------------------------------------------------

def test_q_integer_values():
    assert q_integer(0) == 0
    assert q_integer(2) == q + q**-1
    assert q_integer(3, "unbalanced") == 1 + q + q**2
    assert q_integer(-3) == -q_integer(3)


def test_q_binomial_values():
    # frozen from a symbolic expansion of [4]!/([2]![2]!)
    assert q_binomial(4, 2) == q**4 + q**2 + 2 + q**-2 + q**-4
    assert q_binomial(4, 2, "unbalanced") == 1 + q + 2 * q**2 + q**3 + q**4
    assert q_binomial(5, 2) == q**6 + q**4 + 2 * q**2 + 2 + 2 * q**-2 + q**-4 + q**-6
    for n in range(6):
        assert q_binomial(n, 0) == 1 == q_binomial(n, 0, "unbalanced")
    with pytest.raises(ValueError):
        q_binomial(3, 5)


def test_bad_kind():
    with pytest.raises(ValueError):
        q_integer(2, "skewed")


@pytest.mark.parametrize("ell, poly", [(1, q - 1), (2, q + 1), (4, q**2 + 1), (6, q**2 - q + 1),
                                       (3, q**2 + q + 1)])
def test_cyclotomic_values(ell, poly):
    assert cyclotomic_poly(ell) == poly


def test_cyclotomic_bad_order():
    with pytest.raises(ValueError):
        cyclotomic_poly(0)


def test_valuation_values():
    p3 = Place(3)
    assert valuation(DvrScalar(phi(3) ** 2 * (Q + 1), p3)) == 2
    assert valuation(DvrScalar(1 / phi(3), p3)) == -1
    assert valuation(DvrScalar(Q - 1, p3)) == 0
    assert valuation(DvrScalar(RatFunc(0), p3)) == float("inf")


def test_residue_values():
    z3, z4 = CycloNum.zeta(3), CycloNum.zeta(4)
    assert residue(DvrScalar(Q, Place(3))) == z3
    assert residue(DvrScalar(RatFunc(q_integer(3)), Place(3))) == 0
    # (q^3 - 1)/(q - 1) = 1 + q + q^2 reduced mod q^2 + 1 is q
    assert residue(DvrScalar((Q**3 - 1) / (Q - 1), Place(4))) == z4


def test_residue_of_pole_raises():
    with pytest.raises(ValueError):
        residue(DvrScalar(1 / phi(3), Place(3)))


def test_lattice_basis_examples():
    p = Place(3)
    B = dvr_lattice_basis([[RatFunc(1), RatFunc(0)], [Q, RatFunc(0)]], p)
    assert len(B) == 1 and B.rows[0] == [1, 0]
    B = dvr_lattice_basis([[phi(3), RatFunc(0)], [RatFunc(0), phi(3)]], p)
    assert B.rows == [[phi(3), 0], [0, phi(3)]]
    B = dvr_lattice_basis([[phi(3), RatFunc(1)], [phi(3), RatFunc(-1)]], p)
    assert B.rows == [[phi(3), 1], [0, 1]]
    # same O-span: each set solves the other with integral coefficients
    assert B.contains([phi(3), RatFunc(-1)]) and not B.contains([RatFunc(1), RatFunc(0)])


def test_fields():
    K = field_for(3)
    z = K.qpow(1)
    assert z**3 == K.one and K.qint(3) == K.zero
    assert K.vanishing_order(1) == 3
    G = field_for(None)
    assert G.is_generic and G.qint(2) == Q + 1 / Q


def test_arithmetic_suite_small():
    res = verify_arithmetic(seed=3, matrices=20, max_ell=10)
    assert res.passed and res.checks > 100


# -- properties ---------------------------------------------------------

laurents = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)
nonzero_laurents = laurents.filter(bool)
ratfuncs = st.builds(lambda a, b: RatFunc(a) / RatFunc(b), laurents, nonzero_laurents)


def cyclonums(ell):
    n = len(cyclotomic_poly(ell).coeffs) - 1
    return st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5), min_size=n,
                    max_size=n).map(lambda cs: sum((c * CycloNum.zeta(ell) ** k for k, c in enumerate(cs)),
                                                   CycloNum.zeta(ell) * 0))


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0


@given(ratfuncs, ratfuncs, ratfuncs)
def test_ratfunc_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(ratfuncs)
def test_ratfunc_canonical_form(a):
    # equal values share one representation
    b = (a * (Q + 2)) / (Q + 2)
    assert b == a and hash(b) == hash(a) and str(b) == str(a)


@pytest.mark.parametrize("ell", [3, 4, 5, 6])
def test_cyclo_field_axioms(ell):
    @given(cyclonums(ell), cyclonums(ell), cyclonums(ell))
    def inner(a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == 1
    inner()


def _poly_mul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _oracle_binomial(n, k):
    # Gaussian binomial in t from the product formula, by exact long division
    num, den = {0: 1}, {0: 1}
    for j in range(k):
        num = _poly_mul(num, {n - j: 1, 0: -1})
        den = _poly_mul(den, {j + 1: 1, 0: -1})
    quot = {}
    num = dict(num)
    top = max(den)
    while num:
        d = max(num)
        c = Fraction(num[d], den[top])
        quot[d - top] = c
        for e, y in den.items():
            num[d - top + e] = num.get(d - top + e, 0) - c * y
            if not num[d - top + e]:
                del num[d - top + e]
    return {k_: int(v) for k_, v in quot.items()}


@given(st.integers(0, 10), st.integers(0, 10))
def test_unbalanced_binomial_matches_product_oracle(n, k):
    if k <= n:
        assert q_binomial(n, k, "unbalanced") == LaurentPoly(_oracle_binomial(n, k))


@given(st.integers(-10, 10))
def test_balanced_unbalanced_bridge(m):
    assert q_integer(m) == LaurentPoly.monomial(1 - m) * q_integer(m, "unbalanced").substitute_power(2)


@given(st.integers(0, 12), st.integers(0, 12))
def test_binomial_symmetry_and_bar(n, k):
    if k <= n:
        b = q_binomial(n, k)
        assert b == q_binomial(n, n - k) and b.bar() == b
        assert b * q_factorial(k) * q_factorial(n - k) == q_factorial(n)


@given(st.integers(1, 30))
def test_cyclotomic_product(ell):
    prod = LaurentPoly(1)
    for d in range(1, ell + 1):
        if ell % d == 0:
            prod = prod * cyclotomic_poly(d)
    assert prod == q**ell - 1


@given(st.integers(0, 10_000), st.integers(1, 6))
def test_dvr_basis_contains_generators(seed, ell):
    rng = random.Random(seed)
    gens = random_dvr_matrix(rng, ell, rng.randint(1, 4), 3)
    B = dvr_lattice_basis(gens, Place(ell), 3)
    assert all(B.contains(g) for g in gens)
    assert len(B) <= min(len(gens), 3)
    for row, c in zip(B.rows, B.pivots):
        assert row[c] and all(not x for x in row[:c])


@given(st.integers(0, 10_000), st.integers(2, 6))
def test_residue_is_ring_map(seed, ell):
    rng = random.Random(seed)
    row = [x for x in random_dvr_matrix(rng, ell, 1, 4)[0] if Place(ell).valuation(x) >= 0]
    pl = Place(ell)
    for a in row:
        for b in row:
            assert pl.residue(a * b) == pl.residue(a) * pl.residue(b)
            assert pl.residue(a + b) == pl.residue(a) + pl.residue(b)
