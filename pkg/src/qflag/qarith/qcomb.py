"""
q-analogues of integers, factorials and binomial coefficients.

Two normalizations are provided:

``balanced``
    [m]_t = (t^m - t^-m) / (t - t^-1), symmetric under t -> t^-1.
``unbalanced``
    {m}_t = (t^m - 1) / (t - 1).

They are related by [m]_t = t^(1-m) {m}_(t^2).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Literal

from .laurent import LaurentPoly

__all__ = ["q_integer", "q_factorial", "q_binomial", "q_binomial_any"]

Kind = Literal["balanced", "unbalanced"]


def _check_kind(kind: str) -> None:
    if kind not in ("balanced", "unbalanced"):
        raise ValueError(f"unknown q-analogue kind {kind!r}")


@lru_cache(maxsize=None)
def q_integer(m: int, kind: Kind = "balanced") -> LaurentPoly:
    """The q-integer [m] (balanced) or {m} (unbalanced).

    EXAMPLES::

        >>> q_integer(2)
        q + q^-1
        >>> q_integer(3, "unbalanced")
        q^2 + q + 1
        >>> q_integer(-2)
        -q - q^-1
    """
    _check_kind(kind)
    if m < 0:
        if kind == "balanced":
            return -q_integer(-m, kind)
        return -LaurentPoly.monomial(m) * q_integer(-m, kind)
    if kind == "balanced":
        return LaurentPoly({m - 1 - 2 * k: 1 for k in range(m)})
    return LaurentPoly({k: 1 for k in range(m)})


@lru_cache(maxsize=None)
def q_factorial(n: int, kind: Kind = "balanced") -> LaurentPoly:
    """[n]! = [1][2]...[n]."""
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    out = LaurentPoly(1)
    for k in range(1, n + 1):
        out = out * q_integer(k, kind)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int, kind: Kind = "balanced") -> LaurentPoly:
    """The q-binomial coefficient as the exact quotient [n]!/([k]![n-k]!).

    EXAMPLES::

        >>> q_binomial(4, 2)
        q^4 + q^2 + 2 + q^-2 + q^-4
    """
    _check_kind(kind)
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    den = q_factorial(k, kind) * q_factorial(n - k, kind)
    return q_factorial(n, kind).divexact(den)


@lru_cache(maxsize=None)
def q_binomial_any(x: int, k: int) -> LaurentPoly:
    """Balanced [x choose k] for any integer ``x`` and ``k >= 0``.

    This is [x][x-1]...[x-k+1] / [k]!, a Laurent polynomial for every x.
    Negative tops use [x choose k] = (-1)^k [k-x-1 choose k].

    EXAMPLES::

        >>> q_binomial_any(-1, 2)
        1
        >>> q_binomial_any(1, 3)
        0
    """
    if k < 0:
        raise ValueError("q-binomial needs k >= 0")
    if x >= k:
        return q_binomial(x, k)
    if x >= 0:
        return LaurentPoly(0)
    top = q_binomial(k - x - 1, k)
    return -top if k % 2 else top
