"""
Dense exact linear algebra on lists of rows.

Matrices are ``list[list[x]]`` with scalars from any exact field type
(``RatFunc``, ``CycloNum``, ``flint.fmpq``, or plain ints where the value
is an integer).  Zero tests use truthiness.

Rank computations over Q(q) first try a specialization ``q -> q0`` at a
few rational points: the specialized rank never exceeds the generic one,
so a specialization of full rank certifies full generic rank.  Otherwise
the computation falls back to exact elimination over Q(q).
"""
from __future__ import annotations

from typing import Sequence

import flint

from .qarith.ratfunc import RatFunc

__all__ = [
    "zeros", "identity", "matmul", "matvec", "vecmat", "mat_add", "mat_scale",
    "transpose", "is_zero_matrix", "rank", "row_echelon", "nullspace",
    "solve_left", "inverse", "mat_equal",
]

Matrix = list[list]


def zeros(rows: int, cols: int, zero=0) -> Matrix:
    return [[zero] * cols for _ in range(rows)]


def identity(n: int, one=1, zero=0) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, zero=0) -> Matrix:
    """a @ b, skipping zero entries of ``a`` and ``b``."""
    if not a:
        return []
    cols = len(b[0]) if b else 0
    sparse_b = [[(j, y) for j, y in enumerate(row) if y] for row in b]
    out = []
    for row in a:
        acc = [zero] * cols
        for k, x in enumerate(row):
            if x:
                for j, y in sparse_b[k]:
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def matvec(a: Matrix, v: Sequence, zero=0) -> list:
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def vecmat(v: Sequence, a: Matrix, zero=0) -> list:
    """Row vector times matrix."""
    cols = len(a[0]) if a else 0
    acc = [zero] * cols
    for x, row in zip(v, a):
        if x:
            for j in range(cols):
                y = row[j]
                if y:
                    acc[j] = acc[j] + x * y
    return acc


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: Matrix) -> Matrix:
    return [[c * x if x else x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def is_zero_matrix(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


def mat_equal(a: Matrix, b: Matrix) -> bool:
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def row_echelon(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (nonzero rows) and pivot columns."""
    m = [list(row) for row in a]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((k for k in range(r, len(m)) if m[k][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            inv = 1 / piv if not isinstance(piv, int) else flint.fmpq(1, piv)
            m[r] = [x * inv if x else x for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c]:
                f = m[k][c]
                rowr = m[r]
                m[k] = [x - f * y if y else x for x, y in zip(m[k], rowr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _rank_exact(a: Matrix) -> int:
    return len(row_echelon(a)[1])


def _all_rational(a: Matrix) -> bool:
    return all(isinstance(x, (int, flint.fmpq, flint.fmpz)) for row in a for x in row)


def _has_ratfunc(a: Matrix) -> bool:
    return any(isinstance(x, RatFunc) for row in a for x in row)


_PROBES = (flint.fmpq(3, 2), flint.fmpq(-7, 5), flint.fmpq(11, 3))


def _eval_at(a: Matrix, q0) -> Matrix | None:
    out = []
    for row in a:
        new = []
        for x in row:
            if isinstance(x, RatFunc):
                den = x.den_poly(q0)
                if den == 0:
                    return None
                new.append(flint.fmpq(x.num_poly(q0)) / den)
            else:
                new.append(flint.fmpq(x))
        out.append(new)
    return out


def _fmpq_rank(a: Matrix) -> int:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0 or cols == 0:
        return 0
    return flint.fmpq_mat(rows, cols, [x for row in a for x in row]).rank()


def rank(a: Matrix) -> int:
    """Exact rank of ``a``."""
    if not a or not a[0]:
        return 0
    full = min(len(a), len(a[0]))
    if _all_rational(a):
        return _fmpq_rank(a)
    if _has_ratfunc(a):
        for q0 in _PROBES:
            spec = _eval_at(a, q0)
            if spec is not None and _fmpq_rank(spec) == full:
                return full
    return _rank_exact(a)


def nullspace(a: Matrix, one=1, zero=0) -> Matrix:
    """Basis (as rows) of the right kernel {x : a x = 0}."""
    ncols = len(a[0]) if a else 0
    red, pivots = row_echelon(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for row, p in zip(red, pivots):
            if row[f]:
                x[p] = -row[f]
        basis.append(x)
    return basis


def inverse(a: Matrix, one=1, zero=0) -> Matrix:
    n = len(a)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    red, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def solve_left(basis: Matrix, targets: Matrix, one=1, zero=0) -> Matrix:
    """Find ``x`` with ``x @ basis == targets`` (rows of ``basis`` independent).

    Raises ``ValueError`` when some target row is outside the row space.
    """
    k = len(basis)
    if k == 0:
        if any(any(t) for t in targets):
            raise ValueError("target outside the row space")
        return [[] for _ in targets]
    red_aug, pivots = row_echelon([list(row) + [one if i == j else zero for j in range(k)]
                                   for i, row in enumerate(basis)])
    width = len(basis[0])
    if len(pivots) < k or pivots[-1] >= width:
        raise ValueError("basis rows are dependent")
    out = []
    for t in targets:
        coef = [zero] * k
        rem = list(t)
        for row, p in zip(red_aug, pivots):
            c = rem[p]
            if c:
                for j in range(width):
                    if row[j]:
                        rem[j] = rem[j] - c * row[j]
                for j in range(k):
                    y = row[width + j]
                    if y:
                        coef[j] = coef[j] + c * y
        if any(rem):
            raise ValueError("target outside the row space")
        out.append(coef)
    return out
