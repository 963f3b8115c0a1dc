"""
Named generators of the integral form and the identification at q = +-1.

A :class:`Generator` names one of

============  ==============================================================
``e``/``f``   divided powers ``e_i^(n)``, ``f_i^(n)``
``k``         ``k_y`` (``n = -1`` gives ``k_y^{-1}``), ``y`` in coroot coordinates
``h``         the Cartan element ``h(y, n)``, acting on weight ``mu`` by
              the ordinary binomial ``(<mu, y> choose n)``
``t``         ``t(i, n, s)``, acting by ``(<mu, alpha_i^vee> + s choose n)``
``E``/``F``   the rescaled divided powers ``e(i, n)``, ``f(i, n)`` attached to
              a subset ``J`` of the nodes
============  ==============================================================

with ``e(i,n) = zeta_i^{n(n-1)/2} e_i^(n)`` for ``i`` in ``J`` and
``zeta_i^{n(n+1)/2} e_i^(n) k_i^n`` otherwise, and
``f(i,n) = zeta_i^{n(n+1)/2} f_i^(n) k_i^n`` for ``i`` in ``J`` and
``zeta_i^{n(n-1)/2} f_i^(n)`` otherwise.

When every ``zeta_i`` is a sign the operators ``e(i,n)``, ``f(i,n)``,
``h(y,n)`` satisfy the relations of the classical hyperalgebra;
:func:`verify_pm1` checks this on a module.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Sequence

from ..report import CheckResult
from ..rootdata import RootDatum, Weight
from .module import BlockMap, WeightModule, block_apply, compose
from .relations import _witness, cartan_map, combine, map_residual

__all__ = ["Generator", "parse_generator", "generator_map", "act", "binomial",
           "check_J", "verify_pm1"]


def binomial(x: int, n: int) -> int:
    """(x choose n) for any integer ``x`` and ``n >= 0``.

    EXAMPLES::

        >>> binomial(3, 2), binomial(-1, 3), binomial(2, 5)
        (3, -1, 0)
    """
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if x >= 0:
        return comb(x, n)
    return (-1) ** n * comb(n - x - 1, n)


@dataclass(frozen=True)
class Generator:
    kind: str
    node: int | None = None
    n: int = 1
    y: tuple[int, ...] | None = None
    s: int = 0

    def __str__(self) -> str:
        if self.kind in "ef":
            return f"{self.kind}_{self.node + 1}^({self.n})"
        if self.kind in "EF":
            return f"{self.kind.lower()}({self.node + 1},{self.n})"
        if self.kind == "k":
            return f"k_{list(self.y)}" + ("^-1" if self.n == -1 else "")
        if self.kind == "h":
            return f"h({list(self.y)},{self.n})"
        return f"t({self.node + 1},{self.n},{self.s})"


_PATTERNS = [
    (re.compile(r"^([ef])_?(\d+)(?:\^\((\d+)\))?$"), "div"),
    (re.compile(r"^([ef])\((\d+),(\d+)\)$"), "resc"),
    (re.compile(r"^k_?\[([-\d, ]+)\](\^-1)?$"), "k"),
    (re.compile(r"^h\(\[([-\d, ]+)\],(\d+)\)$"), "h"),
    (re.compile(r"^t\((\d+),(\d+),(-?\d+)\)$"), "t"),
]


def parse_generator(text: str) -> Generator:
    """Parse a generator name; nodes are 1-based in text.

    EXAMPLES::

        >>> parse_generator("e_1^(2)")
        Generator(kind='e', node=0, n=2, y=None, s=0)
        >>> str(parse_generator("f(2,3)"))
        'f(2,3)'
        >>> parse_generator("h([1],2)").y
        (1,)
    """
    t = text.replace(" ", "")
    for pat, what in _PATTERNS:
        m = pat.match(t)
        if not m:
            continue
        if what == "div":
            return Generator(m.group(1), int(m.group(2)) - 1, int(m.group(3) or 1))
        if what == "resc":
            return Generator(m.group(1).upper(), int(m.group(2)) - 1, int(m.group(3)))
        if what == "k":
            y = tuple(int(v) for v in m.group(1).split(","))
            return Generator("k", None, -1 if m.group(2) else 1, y)
        if what == "h":
            return Generator("h", None, int(m.group(2)), tuple(int(v) for v in m.group(1).split(",")))
        return Generator("t", int(m.group(1)) - 1, int(m.group(2)), None, int(m.group(3)))
    raise ValueError(f"unknown generator {text!r}")


def check_J(datum: RootDatum, J: Iterable[int]) -> frozenset[int]:
    """Validate that ``J`` meets every edge of the Dynkin graph exactly once."""
    J = frozenset(J)
    if not J <= set(datum.nodes):
        raise ValueError(f"J={sorted(J)} is not a set of nodes")
    for i in datum.nodes:
        for j in datum.nodes:
            if i != j and datum.cartan[i][j] < 0 and len(J & {i, j}) != 1:
                raise ValueError(f"J={sorted(x + 1 for x in J)} does not separate nodes {i + 1}, {j + 1}")
    return J


def _rescaled(M: WeightModule, kind: str, i: int, n: int, J: frozenset[int]) -> BlockMap:
    F = M.field
    di = M.datum.d[i]
    inJ = i in J
    with_k = (kind == "e") != inJ
    expo = n * (n + 1) // 2 if with_k else n * (n - 1) // 2
    c = F.qpow(di * expo)
    base = M.op(kind, i, n)
    out: BlockMap = {}
    for src, (tgt, m) in base.items():
        s = c * M.ki_scalar(src, i, n) if with_k else c
        out[src] = (tgt, [[x * s if x else x for x in row] for row in m])
    return out


def generator_map(M: WeightModule, g: Generator | str, J: Iterable[int] | None = None) -> BlockMap:
    """The block map of ``g`` on ``M``."""
    if isinstance(g, str):
        g = parse_generator(g)
    datum = M.datum
    F = M.field
    if g.node is not None and g.node not in datum.nodes:
        raise ValueError(f"node {g.node + 1} out of range")
    if g.kind in ("e", "f"):
        return M.op(g.kind, g.node, g.n)
    if g.kind in ("E", "F"):
        Jset = check_J(datum, datum.bipartition_J() if J is None else J)
        return _rescaled(M, g.kind.lower(), g.node, g.n, Jset)
    if g.kind == "k":
        return cartan_map(M, lambda w: F.qpow(g.n * datum.pair(w, g.y)))
    if g.kind == "h":
        return cartan_map(M, lambda w: F.coerce(binomial(datum.pair(w, g.y), g.n)))
    if g.kind == "t":
        return cartan_map(M, lambda w: F.coerce(binomial(w[g.node] + g.s, g.n)))
    raise ValueError(f"unknown generator kind {g.kind!r}")


def act(M: WeightModule, g: Generator | str, v: Mapping[Weight, Sequence],
        J: Iterable[int] | None = None) -> dict[Weight, list]:
    """Apply a generator to a vector ``{weight: coordinates}``.

    EXAMPLES::

        >>> from qflag.rootdata import build_root_datum
        >>> from qflag.uqrep import nabla_module
        >>> M = nabla_module(build_root_datum("A1"), (3,))
        >>> act(M, "h([1],2)", M.unit_vector((3,)))
        {(3,): [3]}
    """
    return block_apply(generator_map(M, g, J), v, M.field.zero)


def _translated(M: WeightModule, g: Generator, gamma: Weight) -> BlockMap:
    """The Cartan operator acting on weight ``mu`` as ``g`` does on ``mu + gamma``."""
    datum = M.datum
    F = M.field
    if g.kind == "h":
        return cartan_map(M, lambda w: F.coerce(binomial(datum.pair(datum.add(w, gamma), g.y), g.n)))
    return cartan_map(M, lambda w: F.coerce(binomial(datum.add(w, gamma)[g.node] + g.s, g.n)))


def verify_pm1(M: WeightModule, J: Iterable[int] | None = None, max_n: int = 3) -> CheckResult:
    """Check the classical hyperalgebra relations for ``e(i,n)``, ``f(i,n)``.

    Requires ``zeta_i = +-1`` for every node.  Checked, for ``n, m <= max_n``:

    * ``k_y e(i,n) = zeta^{n<alpha_i,y>} e(i,n) k_y`` and the ``f`` analogue;
      for the non-grouplike elements ``h(y,m)`` and ``t(j,m,s)`` the
      commutation ``h e(i,n) = e(i,n) h'`` with ``h'`` the translate of
      ``h`` by ``n alpha_i``;
    * ``e(i,n) f(j,m) = f(j,m) e(i,n)`` for ``i != j``;
    * ``e(i,n) f(i,m) = sum_a f(i,m-a) t(i,a,2a-m-n) e(i,n-a)``;
    * the classical Serre relations and ``e(i,a) e(i,b) = (a+b choose a) e(i,a+b)``;
    * ``k_i = 1`` whenever ``zeta_i = 1``.

    EXAMPLES::

        >>> from qflag.rootdata import build_root_datum
        >>> from qflag.uqrep import delta_module
        >>> verify_pm1(delta_module(build_root_datum("A1"), (3,), 2)).passed
        True
    """
    datum = M.datum
    F = M.field
    one = F.one
    for i in datum.nodes:
        if F.qpow(2 * datum.d[i]) != one:
            raise ValueError(f"zeta_{i + 1} is not a sign in {F}; the identification needs q_i^2 = 1")
    Jset = check_J(datum, datum.bipartition_J() if J is None else J)
    res = CheckResult(f"pm1[{M.label}]", data={"J": sorted(j + 1 for j in Jset)})

    def E(i, n):
        return generator_map(M, Generator("E", i, n), Jset)

    def Fm(i, n):
        return generator_map(M, Generator("F", i, n), Jset)

    def rec(diff, relation, **kw):
        res.record(not diff, **(_witness(M, relation, diff, **kw) if diff else {}))

    coroots = [datum.simple_coroot(j) for j in datum.nodes]
    # cc1
    for i in datum.nodes:
        alpha = datum.simple_root(i)
        for n in range(1, max_n + 1):
            for sign, X in ((1, E(i, n)), (-1, Fm(i, n))):
                gamma = tuple(sign * n * a for a in alpha)
                for y in coroots:
                    for p in (1, -1):
                        k = generator_map(M, Generator("k", None, p, y))
                        chi = F.qpow(p * datum.pair(gamma, y))
                        rhs = compose(X, k)
                        rhs = {s: (t, [[chi * x if x else x for x in row] for row in m])
                               for s, (t, m) in rhs.items()}
                        rec(map_residual(M, compose(k, X), rhs), "cc1-k",
                            generator=f"{'e' if sign > 0 else 'f'}({i + 1},{n})", y=list(y), power=p)
                    for m in range(1, max_n + 1):
                        h = Generator("h", None, m, y)
                        rec(map_residual(M, compose(generator_map(M, h), X), compose(X, _translated(M, h, gamma))),
                            "cc1-h", generator=f"{'e' if sign > 0 else 'f'}({i + 1},{n})", h=str(h))
                for j in datum.nodes:
                    for m in range(1, max_n + 1):
                        for s in range(-max_n, max_n + 1):
                            t = Generator("t", j, m, None, s)
                            rec(map_residual(M, compose(generator_map(M, t), X),
                                             compose(X, _translated(M, t, gamma))),
                                "cc1-t", generator=f"{'e' if sign > 0 else 'f'}({i + 1},{n})", t=str(t))
    # cc2, cc3
    for i in datum.nodes:
        for j in datum.nodes:
            for n in range(1, max_n + 1):
                for m in range(1, max_n + 1):
                    lhs = compose(E(i, n), Fm(j, m))
                    if i != j:
                        rec(map_residual(M, lhs, compose(Fm(j, m), E(i, n))), "cc2", i=i + 1, j=j + 1, n=n, m=m)
                        continue
                    terms = []
                    for a in range(min(n, m) + 1):
                        t = generator_map(M, Generator("t", i, a, None, 2 * a - m - n))
                        terms.append((one, compose(Fm(i, m - a), compose(t, E(i, n - a)))))
                    rec(map_residual(M, lhs, combine(M, terms)), "cc3", i=i + 1, n=n, m=m)
    # classical Serre and divided powers
    for i in datum.nodes:
        for j in datum.nodes:
            if i == j:
                continue
            b = 1 - datum.cartan[i][j]
            for name, G in (("e", E), ("f", Fm)):
                terms = [(one if r % 2 == 0 else -one, compose(G(i, b - r), compose(G(j, 1), G(i, r))))
                         for r in range(b + 1)]
                rec(combine(M, terms), f"classical-serre-{name}", i=i + 1, j=j + 1)
    for i in datum.nodes:
        for name, G in (("e", E), ("f", Fm)):
            for a in range(1, max_n):
                for b in range(1, max_n - a + 1):
                    rhs = {s: (t, [[x * comb(a + b, a) for x in row] for row in m])
                           for s, (t, m) in G(i, a + b).items()}
                    rec(map_residual(M, compose(G(i, a), G(i, b)), rhs), f"classical-divided-{name}",
                        i=i + 1, a=a, b=b)
    # k_i = 1 when zeta_i = 1
    for i in datum.nodes:
        if F.qpow(datum.d[i]) == one:
            ki = cartan_map(M, lambda w, i=i: M.ki_scalar(w, i))
            rec(map_residual(M, ki, M.identity_map()), "k-trivial", i=i + 1)
    return res
