"""Frobenius pullback and extremal weight spaces."""
import pytest

from qflag.frobenius import frobenius_pullback, verify_extremal_iso, verify_pullback, verify_pullback_tensor
from qflag.rootdata import build_root_datum, sharp_datum
from qflag.suites import check_frobenius
from qflag.uqrep import nabla_module

A1 = build_root_datum("A1")


def test_pullback_of_natural_a1_at_ell_3():
    sd = sharp_datum(A1, 3)
    P = frobenius_pullback(nabla_module(sd.datum, (1,), 3), sd)
    assert sorted(P.dims) == [(-3,), (3,)]
    assert P.op("f", 0, 1) == {} and P.op("f", 0, 2) == {}
    assert P.op("f", 0, 3) == {(3,): ((-3,), [[1]])}
    assert P.op("e", 0, 3) == {(-3,): ((3,), [[1]])}
    assert P.op("e", 0, 6) == {}


def test_pullback_rejects_wrong_mode():
    sd = sharp_datum(A1, 3)
    with pytest.raises(ValueError):
        frobenius_pullback(nabla_module(sd.datum, (1,), 4), sd)


@pytest.mark.parametrize("label, ell", [("A1", 3), ("A1", 4), ("A2", 3), ("B2", 4), ("B2", 3)])
def test_pullback_relations(label, ell):
    sd = sharp_datum(build_root_datum(label), ell)
    lam = sd.datum.fundamental_weight(0)
    assert verify_pullback(nabla_module(sd.datum, lam, ell), sd).passed


@pytest.mark.parametrize("label, ell", [("A1", 3), ("A2", 3), ("B2", 4)])
def test_pullback_commutes_with_tensor(label, ell):
    sd = sharp_datum(build_root_datum(label), ell)
    A = nabla_module(sd.datum, sd.datum.fundamental_weight(0), ell)
    B = nabla_module(sd.datum, sd.datum.fundamental_weight(sd.datum.rank - 1), ell)
    assert verify_pullback_tensor(A, B, sd).passed


@pytest.mark.parametrize("label, lam, ell", [("A1", (3,), 3), ("A1", (6,), 3), ("A1", (4,), 4), ("A2", (3, 0), 3),
                                             ("B2", (2, 0), 4), ("B2", (0, 2), 4)])
def test_extremal_iso(label, lam, ell):
    res = verify_extremal_iso(build_root_datum(label), lam, ell)
    assert res.passed, res.failures[:2]
    assert all(d == [1, 1, 1, 1] for d in res.data["extremal_dims"].values())


def test_extremal_iso_needs_sharp_weight():
    with pytest.raises(ValueError):
        verify_extremal_iso(A1, (2,), 3)


def test_check_frobenius_suite():
    assert check_frobenius(build_root_datum("A2"), (3, 0), 3).passed
