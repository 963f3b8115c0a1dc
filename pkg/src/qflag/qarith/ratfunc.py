"""
Rational functions in ``q`` over the rationals, the field F = Q(q).

An element is kept as ``N(q) / D(q)`` with integer polynomials ``N`` and
``D`` that are coprime in Z[q] and ``D`` having positive leading
coefficient.  This is the unique reduced form, so equality is a
comparison of the two polynomials.
"""
from __future__ import annotations

from fractions import Fraction

import flint

from .laurent import LaurentPoly

__all__ = ["RatFunc"]

_ONE = flint.fmpz_poly([1])
_ZERO = flint.fmpz_poly()


def _normalize(n: flint.fmpz_poly, d: flint.fmpz_poly) -> tuple[flint.fmpz_poly, flint.fmpz_poly]:
    if d == 0:
        raise ZeroDivisionError("rational function with zero denominator")
    if n == 0:
        return _ZERO, _ONE
    if d != _ONE:
        g = n.gcd(d)
        if g != _ONE:
            n = n // g
            d = d // g
        if d.coeffs()[-1] < 0:
            n, d = -n, -d
    return n, d


class RatFunc:
    """An element of Q(q).

    ``RatFunc(x)`` accepts an int, a :class:`~fractions.Fraction`, a
    :class:`LaurentPoly` or another :class:`RatFunc`; ``RatFunc(a, b)``
    builds the quotient ``a / b``.

    EXAMPLES::

        >>> q = RatFunc.q()
        >>> (q**3 - 1) / (q - 1)
        q^2 + q + 1
        >>> RatFunc(1) / (q + 1) + RatFunc(1) / (q - 1)
        (2*q)/(q^2 - 1)
    """

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, num=0, den=None):
        n, d = _as_pair(num)
        if den is not None:
            n2, d2 = _as_pair(den)
            n, d = n * d2, d * n2
        self._n, self._d = _normalize(n, d)
        self._hash = None

    @classmethod
    def _make(cls, n: flint.fmpz_poly, d: flint.fmpz_poly, reduced: bool = False) -> "RatFunc":
        obj = cls.__new__(cls)
        obj._n, obj._d = (n, d) if reduced else _normalize(n, d)
        obj._hash = None
        return obj

    @classmethod
    def q(cls) -> "RatFunc":
        return cls._make(flint.fmpz_poly([0, 1]), _ONE, True)

    # -- views ---------------------------------------------------------
    @property
    def num_poly(self) -> flint.fmpz_poly:
        return self._n

    @property
    def den_poly(self) -> flint.fmpz_poly:
        return self._d

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly.from_poly(self._n)

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly.from_poly(self._d)

    def is_laurent(self) -> bool:
        """True when the denominator is a power of q times a unit."""
        c = self._d.coeffs()
        return abs(c[-1]) == 1 and all(x == 0 for x in c[:-1])

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        c = self._d.coeffs()
        return LaurentPoly.from_poly(self._n * int(c[-1]), -(len(c) - 1))

    def __bool__(self) -> bool:
        return bool(self._n)

    def is_zero(self) -> bool:
        return not self._n

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        o = other if type(other) is RatFunc else _coerce(other)
        if o is None:
            return NotImplemented
        if not o._n:
            return self
        if not self._n:
            return o
        if self._d == o._d:
            return RatFunc._make(self._n + o._n, self._d)
        if o._d == _ONE:
            return RatFunc._make(self._n + o._n * self._d, self._d, True)
        if self._d == _ONE:
            return RatFunc._make(self._n * o._d + o._n, o._d, True)
        return RatFunc._make(self._n * o._d + o._n * self._d, self._d * o._d)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._make(-self._n, self._d, True)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = other if type(other) is RatFunc else _coerce(other)
        if o is None:
            return NotImplemented
        n1, n2 = self._n, o._n
        if not n1 or not n2:
            return _RZERO
        d1, d2 = self._d, o._d
        one1, one2 = d1 == _ONE, d2 == _ONE
        if one1 and one2:
            return RatFunc._make(n1 * n2, _ONE, True)
        # flint gcds have positive leading coefficient, so d stays normalized
        if not one2:
            g = n1.gcd(d2)
            if g != _ONE:
                n1, d2 = n1 // g, d2 // g
        if not one1:
            g = n2.gcd(d1)
            if g != _ONE:
                n2, d1 = n2 // g, d1 // g
        return RatFunc._make(n1 * n2, d1 * d2, True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self._n:
            raise ZeroDivisionError("inverse of zero")
        n, d = self._d, self._n
        if d.coeffs()[-1] < 0:
            n, d = -n, -d
        return RatFunc._make(n, d, True)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._make(self._n ** n, self._d ** n, True)

    def __call__(self, x):
        """Evaluate at ``x``; the denominator must not vanish there."""
        num = _horner(self._n, x)
        den = _horner(self._d, x)
        return num / den

    # -- comparison ----------------------------------------------------
    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._n == o._n and self._d == o._d

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(int(c) for c in self._n.coeffs()),
                               tuple(int(c) for c in self._d.coeffs())))
        return self._hash

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.to_laurent())
        n, d = str(LaurentPoly.from_poly(self._n)), str(LaurentPoly.from_poly(self._d))
        return f"({n})/({d})"

    __repr__ = __str__


def _horner(p: flint.fmpz_poly, x):
    val = 0
    for c in reversed(p.coeffs()):
        val = val * x + int(c)
    return val


def _as_pair(x) -> tuple[flint.fmpz_poly, flint.fmpz_poly]:
    if isinstance(x, RatFunc):
        return x._n, x._d
    if isinstance(x, LaurentPoly):
        v, p = x.to_poly()
        if v >= 0:
            return p * flint.fmpz_poly([0] * v + [1]), _ONE
        return p, flint.fmpz_poly([0] * (-v) + [1])
    if isinstance(x, (int, flint.fmpz)):
        return flint.fmpz_poly([int(x)]), _ONE
    if isinstance(x, (Fraction, flint.fmpq)):
        fr = Fraction(int(x.numerator if isinstance(x, Fraction) else x.p),
                      int(x.denominator if isinstance(x, Fraction) else x.q))
        return flint.fmpz_poly([fr.numerator]), flint.fmpz_poly([fr.denominator])
    if isinstance(x, flint.fmpz_poly):
        return x, _ONE
    raise TypeError(f"cannot convert {type(x).__name__} to RatFunc")


_CACHE_INT: dict[int, RatFunc] = {}


def _coerce(x) -> RatFunc | None:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, int):
        r = _CACHE_INT.get(x)
        if r is None:
            r = RatFunc(x)
            if -64 <= x <= 64:
                _CACHE_INT[x] = r
        return r
    try:
        return RatFunc(x)
    except TypeError:
        return None


_RZERO = RatFunc(0)
