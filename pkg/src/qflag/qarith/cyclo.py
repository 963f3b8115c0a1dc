"""
Cyclotomic polynomials and exact arithmetic in the cyclotomic field Q(zeta_l).

Elements of Q(zeta_l) are rational polynomials of degree < phi(l),
reduced modulo the l-th cyclotomic polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import flint

from .laurent import LaurentPoly

__all__ = ["cyclotomic_poly", "CycloNum"]


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _cyclotomic_fmpz(ell: int) -> flint.fmpz_poly:
    # q^l - 1 divided by the cyclotomic polynomials of the proper divisors
    p = flint.fmpz_poly([-1] + [0] * (ell - 1) + [1])
    for d in _divisors(ell)[:-1]:
        quo, rem = divmod(p, _cyclotomic_fmpz(d))
        assert rem == 0
        p = quo
    return p


def cyclotomic_poly(ell: int) -> LaurentPoly:
    """The ``ell``-th cyclotomic polynomial as a :class:`LaurentPoly`.

    EXAMPLES::

        >>> cyclotomic_poly(6)
        q^2 - q + 1
    """
    if ell < 1:
        raise ValueError("cyclotomic index must be positive")
    return LaurentPoly.from_poly(_cyclotomic_fmpz(ell))


@lru_cache(maxsize=None)
def _modulus(ell: int) -> flint.fmpq_poly:
    return flint.fmpq_poly(_cyclotomic_fmpz(ell))


class CycloNum:
    """An element of Q(zeta_l).

    INPUT:

    - ``rep`` -- an int, Fraction, ``fmpq`` or ``fmpq_poly`` in the generator
      ``zeta``; it is reduced modulo the cyclotomic polynomial.
    - ``ell`` -- the order of ``zeta``.

    EXAMPLES::

        >>> z = CycloNum.zeta(3)
        >>> z**3 == 1, 1 + z + z**2 == 0
        (True, True)
    """

    __slots__ = ("rep", "ell", "_hash")

    def __init__(self, rep, ell: int):
        if not isinstance(rep, flint.fmpq_poly):
            if isinstance(rep, Fraction):
                rep = flint.fmpq(rep.numerator, rep.denominator)
            rep = flint.fmpq_poly([rep])
        m = _modulus(ell)
        if rep.degree() >= m.degree():
            rep = rep % m
        self.rep = rep
        self.ell = ell
        self._hash = None

    @classmethod
    def _raw(cls, rep: flint.fmpq_poly, ell: int) -> "CycloNum":
        obj = cls.__new__(cls)
        obj.rep, obj.ell, obj._hash = rep, ell, None
        return obj

    @classmethod
    def zeta(cls, ell: int) -> "CycloNum":
        return cls(flint.fmpq_poly([0, 1]), ell)

    def _coerce(self, other) -> "CycloNum | None":
        if isinstance(other, CycloNum):
            if other.ell != self.ell:
                raise ValueError("mixing different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction, flint.fmpq, flint.fmpz)):
            return CycloNum(other, self.ell)
        return None

    def __bool__(self) -> bool:
        return bool(self.rep)

    def is_zero(self) -> bool:
        return self.rep == 0

    def __add__(self, other):
        o = other if type(other) is CycloNum and other.ell == self.ell else self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum._raw(self.rep + o.rep, self.ell)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum._raw(-self.rep, self.ell)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum._raw(self.rep - o.rep, self.ell)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum._raw(o.rep - self.rep, self.ell)

    def __mul__(self, other):
        if type(other) is CycloNum and other.ell == self.ell:
            o = other
        elif isinstance(other, int):
            return CycloNum._raw(self.rep * other, self.ell)
        else:
            o = self._coerce(other)
            if o is None:
                return NotImplemented
        rep = self.rep * o.rep
        m = _modulus(self.ell)
        if rep.degree() >= m.degree():
            rep = rep % m
        return CycloNum._raw(rep, self.ell)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.rep == 0:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        g, s, _ = self.rep.xgcd(_modulus(self.ell))
        # g is a nonzero constant since the modulus is irreducible
        return CycloNum(s / g[0], self.ell)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "CycloNum":
        if n < 0:
            return self.inverse() ** (-n)
        out = CycloNum(1, self.ell)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.rep == o.rep

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ell, tuple(str(c) for c in self.rep.coeffs())))
        return self._hash

    def coefficients(self) -> list[Fraction]:
        """Coefficients in the power basis 1, zeta, ..., zeta^(phi-1)."""
        deg = _modulus(self.ell).degree()
        c = [Fraction(int(x.p), int(x.q)) for x in self.rep.coeffs()]
        return c + [Fraction(0)] * (deg - len(c))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients()):
            if c == 0:
                continue
            if k == 0:
                mono = str(abs(c))
            else:
                base = "z" if k == 1 else f"z^{k}"
                mono = base if abs(c) == 1 else f"{abs(c)}*{base}"
            terms.append(("-" if c < 0 else "+", mono))
        if not terms:
            return "0"
        terms.reverse()
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, mono in terms[1:]:
            out += f" {sign} {mono}"
        return out

    __repr__ = __str__
