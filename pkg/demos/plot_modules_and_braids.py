"""
Weyl modules, braid operators and Frobenius
===========================================

Build dual Weyl modules at generic q and at roots of unity, act by
divided powers and braid operators, and compare extremal weight spaces
with their Frobenius pullbacks.
"""

from qflag.braid import apply_Tw, epsilon_sign, verify_braid
from qflag.frobenius import verify_extremal_iso
from qflag.linalg import rank
from qflag.rootdata import build_root_datum
from qflag.uqrep import act, nabla_module, specialize_weyl, weyl_lattice

A1 = build_root_datum("A1")
A2 = build_root_datum("A2")

# the adjoint module of A1 and the divided power f^(2) on its top vector
M = nabla_module(A1, (2,))
v = M.unit_vector((2,))
print("character:", M.character())
print("f^(2) v =", act(M, "f_1^(2)", v))

# at zeta_3 the canonical map Delta(3) -> nabla(3) kills the middle weights
S = specialize_weyl(weyl_lattice(A1, (3,), 3))
print("canonical ranks at ell=3:", {w: rank(m) for w, (_, m) in S.canonical.items()})

# T_w0 sends the highest weight of V(w1) to the lowest one, for either reduced word
N = nabla_module(A2, (1, 0))
top = N.unit_vector((1, 0))
print("T_121 v =", apply_Tw(N, (0, 1, 0), top), " T_212 v =", apply_Tw(N, (1, 0, 1), top))

# at zeta = -1 the classical operators agree with T_w up to a sign
print("eps for s1 on weight 2 at ell=2:", epsilon_sign(A1, (0,), (2,), 2))
D = specialize_weyl(weyl_lattice(A2, (1, 1), 2)).delta
print("braid suite on Delta(1,1) at ell=2:", verify_braid(D).passed)

# extremal weight spaces survive the trip through the rescaled datum
res = verify_extremal_iso(A2, (3, 0), 3)
print("extremal isomorphisms, A2 ell=3 lambda=(3,0):", res.passed, f"({res.checks} checks)")
