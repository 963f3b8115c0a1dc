"""
Integer Laurent polynomials in one variable ``q``.

A :class:`LaurentPoly` is stored as ``q**v * p(q)`` where ``p`` is an
integer polynomial (``flint.fmpz_poly``) with nonzero constant term, so
that the representation is canonical.  The public view of the
coefficients is the mapping :attr:`LaurentPoly.coeffs` from exponent to
integer.

EXAMPLES::

    >>> q = LaurentPoly.q()
    >>> (q + q**-1) * (q - q**-1)
    q^2 - q^-2
    >>> LaurentPoly({2: 3, -1: -1}).coeffs
    {-1: -1, 2: 3}
"""
from __future__ import annotations

from typing import Mapping, Union

import flint

__all__ = ["LaurentPoly"]

IntLike = Union[int, "flint.fmpz"]


def _strip(v: int, p: flint.fmpz_poly) -> tuple[int, flint.fmpz_poly]:
    """Move powers of q out of ``p`` so that p(0) != 0."""
    if p == 0:
        return 0, flint.fmpz_poly()
    c = p.coeffs()
    k = 0
    while c[k] == 0:
        k += 1
    if k:
        p = flint.fmpz_poly(c[k:])
    return v + k, p


class LaurentPoly:
    """An element of Z[q, q^-1].

    INPUT:

    - ``coeffs`` -- a mapping exponent -> integer, an integer, or ``None``
      for zero.
    """

    __slots__ = ("_v", "_p", "_hash")

    def __init__(self, coeffs: Mapping[int, IntLike] | IntLike | None = None):
        if coeffs is None:
            self._v, self._p = 0, flint.fmpz_poly()
        elif isinstance(coeffs, Mapping):
            items = [(int(e), int(c)) for e, c in coeffs.items() if c != 0]
            if not items:
                self._v, self._p = 0, flint.fmpz_poly()
            else:
                lo = min(e for e, _ in items)
                hi = max(e for e, _ in items)
                dense = [0] * (hi - lo + 1)
                for e, c in items:
                    dense[e - lo] += c
                self._v, self._p = _strip(lo, flint.fmpz_poly(dense))
        else:
            self._v, self._p = 0, flint.fmpz_poly([int(coeffs)])
        self._hash = None

    @classmethod
    def _raw(cls, v: int, p: flint.fmpz_poly) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._v, obj._p = _strip(v, p)
        obj._hash = None
        return obj

    @classmethod
    def q(cls) -> "LaurentPoly":
        """The variable ``q``."""
        return cls._raw(1, flint.fmpz_poly([1]))

    @classmethod
    def monomial(cls, k: int, c: IntLike = 1) -> "LaurentPoly":
        """Return ``c * q**k``."""
        return cls._raw(k, flint.fmpz_poly([int(c)]))

    @classmethod
    def from_poly(cls, p: flint.fmpz_poly, shift: int = 0) -> "LaurentPoly":
        """Return ``q**shift * p(q)`` for an integer polynomial ``p``."""
        return cls._raw(shift, flint.fmpz_poly(p))

    # -- views ---------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, int]:
        """Nonzero coefficients keyed by exponent, in increasing order."""
        return {self._v + k: int(c) for k, c in enumerate(self._p.coeffs()) if c != 0}

    @property
    def low_degree(self) -> int:
        return self._v

    @property
    def high_degree(self) -> int:
        return self._v + max(self._p.degree(), 0)

    def to_poly(self) -> tuple[int, flint.fmpz_poly]:
        """Return ``(v, p)`` with ``self == q**v * p`` and ``p(0) != 0``."""
        return self._v, self._p

    def is_zero(self) -> bool:
        return self._p == 0

    def __bool__(self) -> bool:
        return bool(self._p)

    # -- arithmetic ----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, flint.fmpz)):
            return LaurentPoly(int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        v = min(self._v, o._v)
        a = self._p if self._v == v else self._p * flint.fmpz_poly([0] * (self._v - v) + [1])
        b = o._p if o._v == v else o._p * flint.fmpz_poly([0] * (o._v - v) + [1])
        return LaurentPoly._raw(v, a + b)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self._v, -self._p)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LaurentPoly._raw(self._v + o._v, self._p * o._p)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n >= 0:
            return LaurentPoly._raw(self._v * n, self._p ** n)
        if self._p.degree() == 0 and abs(int(self._p[0])) == 1:
            return LaurentPoly._raw(self._v * n, self._p ** (-n))
        raise ValueError("only units of Z[q, q^-1] have negative powers")

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        quo, rem = divmod(self._p, other._p)
        if rem != 0 or quo * other._p != self._p:
            raise ArithmeticError(f"{other} does not divide {self}")
        return LaurentPoly._raw(self._v - other._v, quo)

    def substitute_power(self, d: int) -> "LaurentPoly":
        """Return ``self(q**d)`` for ``d >= 1``."""
        if d == 1:
            return self
        return LaurentPoly({d * e: c for e, c in self.coeffs.items()})

    def bar(self) -> "LaurentPoly":
        """The involution ``q -> q^-1``."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def __call__(self, x):
        """Evaluate at ``x`` (any ring element supporting ``**`` with negative
        exponents when needed)."""
        val = 0
        for c in reversed(self._p.coeffs()):
            val = val * x + int(c)
        if self._v:
            val = val * x ** self._v
        return val

    # -- comparison ----------------------------------------------------
    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._v == o._v and self._p == o._p

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._v, tuple(int(c) for c in self._p.coeffs())))
        return self._hash

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        for e, c in sorted(self.coeffs.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                base = "q" if e == 1 else f"q^{e}"
                mono = base if abs(c) == 1 else f"{abs(c)}*{base}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, mono))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, mono in terms[1:]:
            out += f" {sign} {mono}"
        return out

    __repr__ = __str__
