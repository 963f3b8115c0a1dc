"""
Coefficient fields for module computations.

A field object bundles the scalar type with the value of the quantum
parameter in it:

* :class:`GenericField` -- F = Q(q) with ``q`` transcendental.
* :class:`CyclotomicField` -- K = Q(zeta_l) with ``q = zeta`` of exact order
  l.  For l in {1, 2} the field is Q itself and scalars are ``flint.fmpq``.

Both expose q-integers ``[m]_{q^d}`` and factorials, the order ``r`` at
which ``[r]_{q^d}`` first vanishes, and the map from the generic field
(residue at the place for cyclotomic fields).
"""
from __future__ import annotations

from functools import lru_cache

import flint

from .cyclo import CycloNum, _modulus
from .dvr import Place, place as _place
from .laurent import LaurentPoly
from .qcomb import q_factorial, q_integer
from .ratfunc import RatFunc

__all__ = ["Field", "GenericField", "CyclotomicField", "field_for"]


class Field:
    """Common interface; see the module docstring."""

    ell: int | None = None
    place: Place | None = None

    def __init__(self):
        self._qpow: dict[int, object] = {}
        self._qint: dict[tuple[int, int], object] = {}
        self._qfact: dict[tuple[int, int], object] = {}

    # subclasses provide: zero, one, q, from_laurent, from_generic, fmt
    def qpow(self, k: int):
        """q**k (or zeta**k)."""
        val = self._qpow.get(k)
        if val is None:
            val = self.from_laurent(LaurentPoly.monomial(k))
            self._qpow[k] = val
        return val

    def qint(self, m: int, d: int = 1):
        """The balanced q-integer [m] evaluated at q**d."""
        key = (m, d)
        val = self._qint.get(key)
        if val is None:
            val = self.from_laurent(q_integer(m).substitute_power(d))
            self._qint[key] = val
        return val

    def qfact(self, n: int, d: int = 1):
        key = (n, d)
        val = self._qfact.get(key)
        if val is None:
            val = self.from_laurent(q_factorial(n).substitute_power(d))
            self._qfact[key] = val
        return val

    def vanishing_order(self, d: int) -> int | None:
        """Least r >= 1 with [r]_{q^d} = 0, or None if no q-integer vanishes."""
        return None

    def __repr__(self) -> str:
        return self.name

    @property
    def is_generic(self) -> bool:
        return self.ell is None


class GenericField(Field):
    """The field Q(q)."""

    name = "generic"

    def __init__(self):
        super().__init__()
        self.zero = RatFunc(0)
        self.one = RatFunc(1)
        self.q = RatFunc.q()

    def from_laurent(self, x: LaurentPoly) -> RatFunc:
        return RatFunc(x)

    def from_generic(self, x):
        return x if isinstance(x, RatFunc) else RatFunc(x)

    def coerce(self, x):
        return RatFunc(x)

    def fmt(self, x) -> str:
        return str(x if isinstance(x, RatFunc) else RatFunc(x))


class CyclotomicField(Field):
    """Q(zeta_l) with q specialized to zeta."""

    def __init__(self, ell: int):
        super().__init__()
        self.ell = ell
        self.place = _place(ell)
        self.name = f"ell={ell}"
        self.rational = ell in (1, 2)
        if self.rational:
            self.zero = flint.fmpq(0)
            self.one = flint.fmpq(1)
            self.q = flint.fmpq(1 if ell == 1 else -1)
        else:
            self.zero = CycloNum(0, ell)
            self.one = CycloNum(1, ell)
            self.q = CycloNum.zeta(ell)

    def from_laurent(self, x: LaurentPoly):
        v, p = x.to_poly()
        if self.rational:
            z = 1 if self.ell == 1 else -1
            val = p(z) if p != 0 else 0
            return flint.fmpq(val * (z ** (abs(v) % 2)))
        m = _modulus(self.ell)
        shift = v % self.ell
        rep = flint.fmpq_poly(p) * flint.fmpq_poly([0] * shift + [1])
        return CycloNum(rep % m, self.ell)

    def from_generic(self, x):
        if self.rational:
            return self.place.residue_rational(x)
        return self.place.residue(x)

    def coerce(self, x):
        if self.rational:
            return flint.fmpq(x)
        return CycloNum(x, self.ell)

    def vanishing_order(self, d: int) -> int | None:
        # [n]_{zeta^d} = 0 iff zeta^(2dn) = 1 while zeta^(2d) != 1
        order = self.ell // _gcd(self.ell, 2 * d)
        return None if order == 1 else order

    def fmt(self, x) -> str:
        if self.rational:
            return str(x)
        return str(x)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def field_for(ell: int | None) -> Field:
    """Shared field instance for ``ell`` (``None`` means generic)."""
    return GenericField() if ell is None else CyclotomicField(ell)
