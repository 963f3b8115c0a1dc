"""
The discrete valuation ring at a cyclotomic place and lattice reduction over it.

For l >= 1 let O be the localization of Q[q] at the prime (Phi_l).  It is
a DVR with uniformizer Phi_l and residue field Q(zeta_l).  A
:class:`Place` computes valuations and residues of rational functions;
:func:`dvr_lattice_basis` turns a generating set of an O-submodule of
F^n into an echelon O-basis by Gaussian elimination that always pivots
on an entry of minimal valuation.  ``place=None`` stands for the generic
case where the ring is F itself.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import flint

from .cyclo import CycloNum, _cyclotomic_fmpz
from .ratfunc import RatFunc

__all__ = [
    "Place",
    "DvrScalar",
    "LatticeBasis",
    "valuation",
    "residue",
    "dvr_lattice_basis",
]

INF = math.inf
_ONE = flint.fmpz_poly([1])


class Place:
    """The prime (Phi_l) of Q[q].

    ``Place(1)`` is the place q - 1 (zeta = 1) and ``Place(2)`` the place
    q + 1 (zeta = -1).
    """

    __slots__ = ("ell", "phi", "_phi_q", "_point")

    def __init__(self, ell: int):
        if ell < 1:
            raise ValueError("the order of zeta must be positive")
        self.ell = ell
        self.phi = _cyclotomic_fmpz(ell)
        self._phi_q = flint.fmpq_poly(self.phi)
        self._point = {1: 1, 2: -1}.get(ell)

    def __repr__(self) -> str:
        return f"Place({self.ell})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Place) and other.ell == self.ell

    def __hash__(self) -> int:
        return hash(("Place", self.ell))

    def _poly_valuation(self, p: flint.fmpz_poly) -> tuple[int, flint.fmpz_poly]:
        if self._point is not None and p(self._point) != 0:
            return 0, p
        v = 0
        while True:
            quo, rem = divmod(p, self.phi)
            if rem != 0:
                return v, p
            p, v = quo, v + 1

    def valuation(self, x) -> float | int:
        """Order of vanishing of ``x`` (a RatFunc or int) at this place."""
        x = x if isinstance(x, RatFunc) else RatFunc(x)
        if not x:
            return INF
        vn, _ = self._poly_valuation(x.num_poly)
        if vn:
            return vn
        vd, _ = self._poly_valuation(x.den_poly)
        return -vd

    def split(self, x: RatFunc) -> tuple[int, RatFunc]:
        """Write ``x = Phi**v * u`` with ``u`` a unit; return ``(v, u)``."""
        vn, n = self._poly_valuation(x.num_poly)
        if vn:
            return vn, RatFunc._make(n, x.den_poly, True)
        vd, d = self._poly_valuation(x.den_poly)
        return -vd, RatFunc._make(x.num_poly, d, True)

    def uniformizer_power(self, v: int) -> RatFunc:
        return RatFunc(self.phi) ** v

    def residue(self, x) -> CycloNum:
        """Image of ``x`` in Q(zeta_l); raises ``ValueError`` on a pole."""
        if isinstance(x, int):
            return CycloNum(x, self.ell)
        if not x:
            return CycloNum(0, self.ell)
        d = flint.fmpq_poly(x.den_poly) % self._phi_q
        if d == 0:
            raise ValueError(f"cannot specialize {x}: pole at Phi_{self.ell}")
        n = flint.fmpq_poly(x.num_poly) % self._phi_q
        return CycloNum(n, self.ell) / CycloNum(d, self.ell)

    def residue_rational(self, x) -> flint.fmpq:
        """Residue for l in {1, 2}, where the residue field is Q."""
        if isinstance(x, int):
            return flint.fmpq(x)
        if not x:
            return flint.fmpq(0)
        d = x.den_poly(self._point)
        if d == 0:
            raise ValueError(f"cannot specialize {x}: pole at q = {self._point}")
        return flint.fmpq(x.num_poly(self._point)) / d


@lru_cache(maxsize=None)
def place(ell: int | None) -> Place | None:
    """Cached :class:`Place` constructor (``None`` for generic mode)."""
    return None if ell is None else Place(ell)


@dataclass(frozen=True)
class DvrScalar:
    """A rational function viewed in the local ring at ``place``."""

    value: RatFunc
    place: Place


def valuation(x: DvrScalar) -> float | int:
    """Exact order of vanishing; ``math.inf`` for zero.

    EXAMPLES::

        >>> from qflag.qarith import RatFunc, cyclotomic_poly
        >>> phi = RatFunc(cyclotomic_poly(3))
        >>> valuation(DvrScalar(1 / phi, Place(3)))
        -1
    """
    return x.place.valuation(x.value)


def residue(x: DvrScalar) -> CycloNum:
    """The image of ``x`` in the residue field Q(zeta_l)."""
    if x.place.valuation(x.value) < 0:
        raise ValueError(f"negative valuation: {x.value} has a pole at Phi_{x.place.ell}")
    return x.place.residue(x.value)


# ---------------------------------------------------------------------------
# lattice reduction


def _first_nonzero(row: Sequence) -> int:
    for c, x in enumerate(row):
        if x:
            return c
    return -1


def _axpy(row: list, coef, other: Sequence, start: int) -> None:
    """row -= coef * other, from column ``start`` on."""
    for c in range(start, len(row)):
        y = other[c]
        if y:
            row[c] = row[c] - coef * y


class LatticeBasis:
    """An echelon basis of a lattice over the local ring at ``place``.

    Rows are stored in increasing pivot order and each row vanishes before
    its pivot column.  Rows are scaled by units so that their entries are
    polynomials divided by a power of ``Phi``, without common unit factor
    (in generic mode: primitive integral polynomial vectors).
    """

    __slots__ = ("place", "width", "rows", "pivots", "pivot_vals")

    def __init__(self, width: int, place: Place | None):
        self.place = place
        self.width = width
        self.rows: list[list] = []
        self.pivots: list[int] = []
        self.pivot_vals: list[int] = []

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def _val(self, x) -> int:
        return 0 if self.place is None else self.place.valuation(x)

    def _normalize(self, row: list, c: int) -> int:
        # rescale by a unit: entries become polynomials over a power of Phi
        # with no unit content, which keeps later arithmetic small
        entries = [(k, x if isinstance(x, RatFunc) else RatFunc(x)) for k, x in enumerate(row) if x]
        den = _ONE
        for _, x in entries:
            d = x.den_poly
            if d != _ONE:
                den = den * d // den.gcd(d)
        nums = [x.num_poly * (den // x.den_poly) for _, x in entries]
        g = nums[0]
        for n in nums[1:]:
            if g == _ONE:
                break
            g = g.gcd(n)
        if self.place is not None:
            den = self.place._poly_valuation(den)[1]
            g = self.place._poly_valuation(g)[1]
        scale = RatFunc._make(den, _ONE, True) / RatFunc._make(g, _ONE, True)
        if scale != 1:
            for k, x in entries:
                row[k] = x * scale
        return self._val(row[c])

    def insert(self, vec: Iterable) -> bool:
        """Add ``vec`` to the generating set; return True if the lattice grew."""
        g = list(vec)
        if len(g) != self.width:
            raise ValueError("vector length does not match lattice width")
        grew = False
        start = 0
        while True:
            c = -1
            for k in range(start, self.width):
                if g[k]:
                    c = k
                    break
            if c < 0:
                return grew
            # locate pivot row for column c
            pos = _bisect(self.pivots, c)
            if pos < len(self.pivots) and self.pivots[pos] == c:
                row = self.rows[pos]
                vg = self._val(g[c])
                if vg < self.pivot_vals[pos]:
                    # g becomes the new pivot row; the old one gets reduced
                    vnew = self._normalize(g, c)
                    self.rows[pos], self.pivot_vals[pos] = g, vnew
                    g, row = row, g
                    grew = True
                _axpy(g, g[c] / row[c], row, c)
                g[c] = 0
                start = c + 1
            else:
                v = self._normalize(g, c)
                self.rows.insert(pos, g)
                self.pivots.insert(pos, c)
                self.pivot_vals.insert(pos, v)
                return True

    def solve(self, vec: Sequence) -> list:
        """Coefficients ``x`` with ``vec == sum x_k rows[k]``.

        Raises ``ValueError`` if ``vec`` is outside the F-span.
        """
        g = list(vec)
        coefs = []
        for row, c in zip(self.rows, self.pivots):
            x = g[c]
            if x:
                x = x / row[c] if row[c] != 1 else x
                _axpy(g, x, row, c)
                g[c] = 0
            coefs.append(x)
        if any(g):
            raise ValueError("vector is not in the span of the lattice basis")
        return coefs

    def contains(self, vec: Sequence) -> bool:
        """Membership in the O-span (all coefficients integral)."""
        try:
            coefs = self.solve(vec)
        except ValueError:
            return False
        return all(self._val(x) >= 0 for x in coefs if x)


def _bisect(seq: list[int], x: int) -> int:
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if seq[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def dvr_lattice_basis(generators: Iterable[Sequence], pl: Place | None,
                      width: int | None = None) -> LatticeBasis:
    """An echelon O-basis of the O-span of ``generators``.

    EXAMPLES::

        >>> from qflag.qarith import RatFunc, cyclotomic_poly
        >>> phi = RatFunc(cyclotomic_poly(3))
        >>> B = dvr_lattice_basis([[phi, 1], [phi, -1]], Place(3))
        >>> [[str(x) for x in row] for row in B.rows]
        [['q^2 + q + 1', '1'], ['0', '1']]
    """
    gens = [list(g) for g in generators]
    if width is None:
        if not gens:
            return LatticeBasis(0, pl)
        width = len(gens[0])
    basis = LatticeBasis(width, pl)
    for g in gens:
        basis.insert(g)
    return basis
