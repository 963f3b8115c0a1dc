"""
Self-checks of the scalar layer.

:func:`verify_arithmetic` runs the identities the rest of the package
relies on: the bridge between balanced and unbalanced q-integers, the
Pascal recurrence, the reconstruction of ``q^l - 1`` from cyclotomic
polynomials and span round-trips of DVR lattice bases on random
matrices.
"""
from __future__ import annotations

import random

from ..report import CheckResult
from .cyclo import cyclotomic_poly
from .dvr import Place, dvr_lattice_basis
from .laurent import LaurentPoly
from .qcomb import q_binomial, q_factorial, q_integer
from .ratfunc import RatFunc

__all__ = ["verify_arithmetic", "random_dvr_matrix"]

Q = LaurentPoly.q()


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def random_dvr_matrix(rng: random.Random, ell: int, rows: int, cols: int) -> list[list[RatFunc]]:
    """Rows of small rational functions with controlled valuations at ``Phi_ell``."""
    phi = RatFunc(cyclotomic_poly(ell))
    units = [RatFunc(1), RatFunc(Q + 2), RatFunc(Q), RatFunc(2 * Q * Q - 3)]
    out = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            if rng.random() < 0.25:
                row.append(RatFunc(0))
                continue
            num = LaurentPoly({k: rng.randint(-3, 3) for k in range(rng.randint(1, 3))}) or LaurentPoly(1)
            x = RatFunc(num) * phi ** rng.randint(0, 2) / rng.choice(units)
            if rng.random() < 0.15:
                x = x / phi
            row.append(x)
        out.append(row)
    return out


def verify_arithmetic(seed: int = 0, matrices: int = 200, max_ell: int = 24,
                      m_range: int = 10, n_max: int = 12) -> CheckResult:
    """Run the scalar identities; see the module docstring.

    EXAMPLES::

        >>> verify_arithmetic(matrices=5, max_ell=6).passed
        True
    """
    res = CheckResult("arithmetic")
    # [m] = q^(1-m) {m}_(q^2)
    for m in range(-m_range, m_range + 1):
        rhs = LaurentPoly.monomial(1 - m) * q_integer(m, "unbalanced").substitute_power(2)
        res.record(q_integer(m) == rhs, identity="balanced-unbalanced", m=m)
    # Pascal: [n, k] = q^k [n-1, k] + q^(k-n) [n-1, k-1]; {n, k} = {n-1, k-1} + t^k {n-1, k}
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            a = q_binomial(n - 1, k) if k <= n - 1 else LaurentPoly(0)
            b = q_binomial(n - 1, k - 1) if k >= 1 else LaurentPoly(0)
            bal = LaurentPoly.monomial(k) * a + LaurentPoly.monomial(k - n) * b
            res.record(q_binomial(n, k) == bal, identity="pascal-balanced", n=n, k=k)
            ua = q_binomial(n - 1, k, "unbalanced") if k <= n - 1 else LaurentPoly(0)
            ub = q_binomial(n - 1, k - 1, "unbalanced") if k >= 1 else LaurentPoly(0)
            unb = ub + LaurentPoly.monomial(k) * ua
            res.record(q_binomial(n, k, "unbalanced") == unb, identity="pascal-unbalanced", n=n, k=k)
            prod = q_binomial(n, k) * q_factorial(k) * q_factorial(n - k)
            res.record(prod == q_factorial(n), identity="factorial-ratio", n=n, k=k)
    # prod_{d | l} Phi_d = q^l - 1
    for ell in range(1, max_ell + 1):
        prod = LaurentPoly(1)
        for d in _divisors(ell):
            prod = prod * cyclotomic_poly(d)
        res.record(prod == Q ** ell - 1, identity="cyclotomic-product", ell=ell)
    # DVR bases: span equality with a basis built in another order
    rng = random.Random(seed)
    for t in range(matrices):
        ell = rng.randint(1, 6)
        pl = Place(ell)
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        gens = random_dvr_matrix(rng, ell, rows, cols)
        B = dvr_lattice_basis(gens, pl, cols)
        shuffled = list(gens)
        rng.shuffle(shuffled)
        B2 = dvr_lattice_basis(shuffled, pl, cols)
        ok = (all(B.contains(g) for g in gens) and all(B.contains(r) for r in B2.rows)
              and all(B2.contains(r) for r in B.rows) and len(B) == len(B2))
        pivots_distinct = len(set(B.pivots)) == len(B) and all(r[c] for r, c in zip(B.rows, B.pivots))
        res.record(ok and pivots_distinct, identity="dvr-span", trial=t, ell=ell)
    return res
