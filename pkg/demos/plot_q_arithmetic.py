"""
Exact q-arithmetic and specialization
=====================================

Gaussian integers and binomials live in Z[q, q^-1].  At a root of unity
they are read off through the local ring at the cyclotomic polynomial.
"""

from qflag.qarith import LaurentPoly, RatFunc, cyclotomic_poly, place, q_binomial, q_integer

# balanced q-integers are symmetric under q -> q^-1
print("[3] =", q_integer(3))
print("[4 choose 2] =", q_binomial(4, 2))
print("unbalanced [4 choose 2] =", q_binomial(4, 2, "unbalanced"))

# the cyclotomic polynomial that cuts out zeta_3
print("Phi_3 =", cyclotomic_poly(3))

# [3] vanishes to first order at zeta_3, and [3]/[1] is a unit at zeta_4
P3 = place(3)
print("v_3([3]) =", P3.valuation(RatFunc(q_integer(3))))
q = RatFunc.q()
print("res_4((q^3 - 1)/(q - 1)) =", place(4).residue((q ** 3 - 1) / (q - 1)))

# Laurent arithmetic is exact: the bar involution is a ring map
a = LaurentPoly.q() + 2
b = q_integer(5)
print("bar(ab) == bar(a) bar(b):", (a * b).bar() == a.bar() * b.bar())
