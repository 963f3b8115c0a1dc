"""
Covering the flag manifold by quantum minors
============================================

For each lambda, multiply nabla(lambda) against every quantum minor
sigma^w_mu and ask whether the images fill nabla(lambda + mu).
"""

from qflag.flagcover import covering_rank, sharp_mult_surjectivity, verify_covering
from qflag.rootdata import build_root_datum

A1 = build_root_datum("A1")
B2 = build_root_datum("B2")

# one degree in detail: each minor fills 3 of 4 dimensions, together all 4
c = covering_rank(A1, (2,), (1,))
print(f"A1 lambda=2 mu=1: per w {c.per_w}, total {c.total} of {c.target}")

# classical A1 with mu = 3: monomials x^a y^b with a or b >= 3 fill degree lambda+3 once lambda >= 2
res = verify_covering(A1, (3,), 1, 5)
print("A1 ell=1 mu=3 thresholds:", res.data["thresholds"])

# B2 at zeta = -1: the zero weight of nabla(w2) is missed in degree w2 alone
for r in verify_covering(B2, (0, 1), 2, 1).data["runs"]:
    print(f"B2 ell=2 lambda={r['lambda']}: {r['total']}/{r['target']}")

# the product with a Frobenius pullback is not onto in low degree
for lam in range(4):
    out = sharp_mult_surjectivity(A1, (lam,), (3,), 3)
    print(f"A1 ell=3 lambda={lam}: rank {out['rank']} of {out['target']}")
