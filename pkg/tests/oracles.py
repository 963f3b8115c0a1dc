"""Independent oracles for the tests.

Nothing here imports the package: root systems are written out in
orthogonal coordinates and the Weyl dimension formula is evaluated with
fractions.
"""
from fractions import Fraction
from itertools import combinations

# positive roots and fundamental weights in an orthogonal basis;
# B2 node 1 is the short simple root, node 2 the long one
_SYSTEMS = {
    "A1": ([(1, -1)], [(Fraction(1, 2), Fraction(-1, 2))]),
    "A1xA1": ([(1, 0), (0, 1)], [(Fraction(1, 2), 0), (0, Fraction(1, 2))]),
    "A2": ([(1, -1, 0), (0, 1, -1), (1, 0, -1)],
           [(Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3)),
            (Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3))]),
    "B2": ([(0, 1), (1, -1), (1, 0), (1, 1)],
           [(Fraction(1, 2), Fraction(1, 2)), (1, 0)]),
}


def _dot(x, y):
    return sum(Fraction(a) * b for a, b in zip(x, y))


def weyl_dimension(type_label, lam):
    """prod over positive roots of (lam + rho, a) / (rho, a)."""
    roots, fund = _SYSTEMS[type_label]
    n = len(fund[0])
    rho = [sum(Fraction(r[k]) for r in roots) / 2 for k in range(n)]
    v = [rho[k] + sum(c * w[k] for c, w in zip(lam, fund)) for k in range(n)]
    out = Fraction(1)
    for a in roots:
        out *= _dot(v, a) / _dot(rho, a)
    assert out.denominator == 1
    return int(out)


def positive_root_count(type_label):
    return len(_SYSTEMS[type_label][0])


def a1_products_cover(lam, mu):
    """Classical P^1 oracle: monomials x^a y^b of degree lam + mu are all
    multiples of x^mu or y^mu exactly when lam >= mu - 1."""
    d = lam + mu
    return all(a >= mu or d - a >= mu for a in range(d + 1))


def gaussian_binomial(n, k):
    """{n choose k}_t as a coefficient dict, by counting k-subsets of
    {0..n-1} by their inversion statistic sum(s) - k(k-1)/2."""
    out = {}
    for s in combinations(range(n), k):
        e = sum(s) - k * (k - 1) // 2
        out[e] = out.get(e, 0) + 1
    return out
