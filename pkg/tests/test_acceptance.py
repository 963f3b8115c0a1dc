"""Acceptance gate: nine criteria, one printed PASS/FAIL line each.

Run on its own with ``pytest tests/test_acceptance.py``.  Every check is
exact; the runtime limits are part of each criterion.
"""
import time

import pytest

from oracles import a1_products_cover, weyl_dimension
from qflag.flagcover import scan_sharp_surjectivity
from qflag.report import CheckResult
from qflag.rootdata import build_root_datum
from qflag.suites import (bounded_weights, check_arithmetic, check_braid, check_covering, check_frobenius,
                          check_graded, check_pm1, check_relations)
from qflag.uqrep import delta_module, nabla_module

TYPES = ("A1", "A1xA1", "A2", "B2")


@pytest.fixture
def gate(capsys):
    """Time a criterion and print its verdict line outside pytest's capture."""
    state = {}

    def finish(number: int, res: CheckResult, limit: float, extra: str = "") -> None:
        elapsed = time.perf_counter() - state["t0"]
        ok = res.passed and elapsed < limit
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f} s, limit {limit:.0f} s, "
                  f"{res.checks} checks){extra}")
        assert res.passed, res.failures[:3]
        assert elapsed < limit, f"took {elapsed:.1f} s"

    state["t0"] = time.perf_counter()
    return finish


def test_criterion_1_arithmetic(gate):
    gate(1, check_arithmetic(seed=0, matrices=200), 10)


def test_criterion_2_relations(gate):
    res = CheckResult("relations")
    for label in TYPES:
        for ell in (None, 1, 2, 3, 4):
            res.merge(check_relations(build_root_datum(label), ell))
    gate(2, res, 60)


def test_criterion_3_braid(gate):
    res = CheckResult("braid")
    for label in TYPES:
        for ell in (1, 2):
            res.merge(check_braid(build_root_datum(label), ell, bound=3))
    gate(3, res, 60)


def test_criterion_4_pm1(gate):
    res = CheckResult("pm1")
    for label in TYPES:
        for ell in (1, 2):
            # default J and its complement
            res.merge(check_pm1(build_root_datum(label), ell))
    gate(4, res, 120)


def test_criterion_5_frobenius(gate):
    res = CheckResult("frobenius")
    for label, ell, lam in (("A1", 3, (3,)), ("A1", 4, (2,)), ("A2", 3, (3, 0))):
        res.merge(check_frobenius(build_root_datum(label), lam, ell))
    gate(5, res, 120)


def test_criterion_6_graded_ring(gate):
    res = CheckResult("graded")
    for label in TYPES:
        for ell in (None, 2, 3):
            res.merge(check_graded(build_root_datum(label), ell, height=6, full=False))
    gate(6, res, 300)


COVERING_CASES = [("A1", None), ("A1", 1), ("A1", 2), ("A1", 3), ("A1", 4),
                  ("A2", None), ("A2", 2), ("A2", 3), ("B2", 2)]


def test_criterion_7_covering(gate):
    res = CheckResult("covering")
    thresholds = {}
    for label, ell in COVERING_CASES:
        datum = build_root_datum(label)
        grid = 8 if datum.rank == 1 else 4
        for i in datum.nodes:
            mu = datum.fundamental_weight(i)
            run = check_covering(datum, ell, mu, grid)
            res.merge(run)
            thresholds[(label, ell, mu)] = run.data["thresholds"]
            if (label, ell) == ("A1", 1):
                # classical bound: covered from lam = mu on, matching the monomial count
                res.record(all(t[0] <= mu[0] for t in run.data["thresholds"]), case="A1 ell=1 threshold <= mu")
                for r in run.data["runs"]:
                    res.record(r["covered"] == a1_products_cover(r["lambda"][0], mu[0]), lam=r["lambda"])
    odd = {k: v for k, v in thresholds.items() if v != [[0] * len(k[2])]}
    gate(7, res, 1200, f"; thresholds other than 0: {odd}")


def test_criterion_8_sharp_surjectivity(gate):
    A1 = build_root_datum("A1")
    res = scan_sharp_surjectivity(A1, (3,), 3, 8)
    at_zero = res.data["runs"][0]
    res.record(at_zero["lambda"] == [0] and not at_zero["surjective"], relation="fails at lam=0")
    res.record((at_zero["rank"], at_zero["target"]) == (2, 4), relation="rank 2 of 4 at lam=0")
    gate(8, res, 60, f"; thresholds {res.data['thresholds']}")


def _dimension_range(label: str, ell):
    # B2 Delta at ell in {3, 4} with a coordinate 3 is out of desk range; see the ledger
    bound = 2 if label == "B2" and ell in (3, 4) else 3
    return bounded_weights(build_root_datum(label), bound, nonzero=False)


def test_criterion_9_dimensions(gate):
    res = CheckResult("dimension")
    for label in TYPES:
        datum = build_root_datum(label)
        for ell in (None, 1, 2, 3, 4):
            for lam in _dimension_range(label, ell):
                want = weyl_dimension(label, lam)
                got = (delta_module(datum, lam, ell).dim, nabla_module(datum, lam, ell).dim)
                res.record(got == (want, want), type=label, ell=ell, lam=list(lam), got=list(got), want=want)
    gate(9, res, 60)
