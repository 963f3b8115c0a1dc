"""
Defining relations as operator identities on a module.

Algebra elements are never represented abstractly: a relation holds on a
module when the two sides agree as block maps.  The checks are

* weight grading of every divided power,
* ``k_y e_i^(n) = q^{n<alpha_i, y>} e_i^(n) k_y`` (and for ``f``),
* ``e_i f_j - f_j e_i = delta_ij [<mu, alpha_i^vee>]_{q_i}`` on weight ``mu``,
* the quantum Serre relations in the ``e_i`` and in the ``f_i``,
* ``e_i^(a) e_i^(b) = [a+b choose a]_{q_i} e_i^(a+b)``,
* the commutation of divided powers

  ``e_i^(n) f_i^(m) = sum_t f_i^(m-t) [K_i; 2t-m-n choose t] e_i^(n-t)``

  where ``[K_i; c choose t]`` acts on weight ``nu`` by
  ``[<nu, alpha_i^vee> + c choose t]_{q_i}``.
"""
from __future__ import annotations

from typing import Callable, Iterable

from ..linalg import zeros
from ..qarith import q_binomial, q_binomial_any
from ..report import CheckResult
from ..rootdata import Weight
from .module import BlockMap, WeightModule, compose

__all__ = ["combine", "cartan_map", "maps_equal", "map_residual", "default_power_bound",
           "verify_relations"]


def combine(M: WeightModule, terms: Iterable[tuple[object, BlockMap]]) -> BlockMap:
    """The linear combination ``sum c * op`` of block maps on ``M``."""
    out: dict[Weight, tuple[Weight, list]] = {}
    zero = M.field.zero
    for c, op in terms:
        if not c:
            continue
        for src, (tgt, m) in op.items():
            cur = out.get(src)
            if cur is None:
                cur = (tgt, zeros(M.dims[tgt], M.dims[src], zero))
                out[src] = cur
            elif cur[0] != tgt:
                raise ValueError(f"inhomogeneous combination at weight {src}")
            acc = cur[1]
            for r, row in enumerate(m):
                arow = acc[r]
                for k, x in enumerate(row):
                    if x:
                        arow[k] = arow[k] + c * x
    return {s: v for s, v in out.items() if any(x for row in v[1] for x in row)}


def cartan_map(M: WeightModule, scalar: Callable[[Weight], object]) -> BlockMap:
    """The operator acting on the ``mu`` weight space by ``scalar(mu)``."""
    out: BlockMap = {}
    zero = M.field.zero
    for w in M.weights:
        c = scalar(w)
        if c:
            n = M.dims[w]
            out[w] = (w, [[c if i == j else zero for j in range(n)] for i in range(n)])
    return out


def map_residual(M: WeightModule, a: BlockMap, b: BlockMap) -> BlockMap:
    return combine(M, [(M.field.one, a), (-M.field.one, b)])


def maps_equal(M: WeightModule, a: BlockMap, b: BlockMap) -> bool:
    return not map_residual(M, a, b)


def _witness(M: WeightModule, relation: str, residual: BlockMap, **extra) -> dict:
    src, (tgt, m) = next(iter(residual.items()))
    fmt = M.field.fmt
    return {"module": M.label, "relation": relation, "weight": list(src),
            "target": list(tgt), "residual": [[fmt(x) for x in row] for row in m[:4]], **extra}


def default_power_bound(M: WeightModule, cap: int = 4) -> int:
    """Largest divided power acting nontrivially somewhere, capped."""
    best = 1
    for i in M.datum.nodes:
        for w in M.weights:
            best = max(best, M.max_power("e", i, w))
    return min(best, cap)


def verify_relations(M: WeightModule, max_n: int | None = None) -> CheckResult:
    """Check the defining relations and divided-power identities on ``M``.

    EXAMPLES::

        >>> from qflag.rootdata import build_root_datum
        >>> from qflag.uqrep import fundamental_module
        >>> verify_relations(fundamental_module(build_root_datum("A2"), 0)).passed
        True
    """
    datum = M.datum
    F = M.field
    res = CheckResult(f"relations[{M.label}]")
    N = max_n if max_n is not None else default_power_bound(M)
    one = F.one

    # grading and k-commutation
    for i in datum.nodes:
        for kind, sign in (("e", 1), ("f", -1)):
            for n in range(1, N + 1):
                op = M.op(kind, i, n)
                ok = all(tgt == datum.shift(src, i, sign * n) and src in M.dims and tgt in M.dims
                         and len(m) == M.dims[tgt] and all(len(r) == M.dims[src] for r in m)
                         for src, (tgt, m) in op.items())
                res.record(ok, module=M.label, relation="grading", generator=f"{kind}_{i + 1}^({n})")
                for j in datum.nodes:
                    y = datum.simple_coroot(j)
                    ky = cartan_map(M, lambda w, y=y: M.k_scalar(w, y))
                    lhs = compose(ky, op)
                    rhs = _scale(compose(op, ky), F.qpow(sign * n * datum.cartan[j][i]))
                    diff = map_residual(M, lhs, rhs)
                    res.record(not diff, **(_witness(M, "k-commutation", diff, generator=f"{kind}_{i + 1}^({n})",
                                                     coroot=j + 1) if diff else {}))

    # [e_i, f_j]
    for i in datum.nodes:
        for j in datum.nodes:
            ei, fj = M.op("e", i, 1), M.op("f", j, 1)
            comm = combine(M, [(one, compose(ei, fj)), (-one, compose(fj, ei))])
            if i == j:
                di = datum.d[i]
                expect = cartan_map(M, lambda w, i=i, di=di: F.qint(w[i], di))
                diff = map_residual(M, comm, expect)
            else:
                diff = comm
            res.record(not diff, **(_witness(M, "ef-commutator", diff, i=i + 1, j=j + 1) if diff else {}))

    # quantum Serre
    for i in datum.nodes:
        for j in datum.nodes:
            if i == j:
                continue
            b = 1 - datum.cartan[i][j]
            for kind in ("e", "f"):
                terms = []
                for r in range(b + 1):
                    op = compose(M.op(kind, i, b - r), compose(M.op(kind, j, 1), M.op(kind, i, r)))
                    terms.append((one if r % 2 == 0 else -one, op))
                diff = combine(M, terms)
                res.record(not diff, **(_witness(M, f"serre-{kind}", diff, i=i + 1, j=j + 1) if diff else {}))

    # divided-power products
    for i in datum.nodes:
        di = datum.d[i]
        for kind in ("e", "f"):
            for a in range(1, N):
                for b in range(1, N - a + 1):
                    lhs = compose(M.op(kind, i, a), M.op(kind, i, b))
                    c = F.from_laurent(q_binomial(a + b, a).substitute_power(di))
                    diff = map_residual(M, lhs, _scale(M.op(kind, i, a + b), c))
                    res.record(not diff, **(_witness(M, f"divided-power-{kind}", diff, i=i + 1, a=a, b=b)
                                            if diff else {}))

    # commutation of divided powers
    for i in datum.nodes:
        di = datum.d[i]
        for n in range(1, N + 1):
            for m in range(1, N + 1):
                lhs = compose(M.op("e", i, n), M.op("f", i, m))
                terms = []
                for t in range(min(n, m) + 1):
                    c0 = 2 * t - m - n
                    mid = cartan_map(M, lambda w, c0=c0, t=t: F.from_laurent(
                        q_binomial_any(w[i] + c0, t).substitute_power(di)))
                    terms.append((one, compose(M.op("f", i, m - t), compose(mid, M.op("e", i, n - t)))))
                diff = map_residual(M, lhs, combine(M, terms))
                res.record(not diff, **(_witness(M, "divided-power-commutation", diff, i=i + 1, n=n, m=m)
                                        if diff else {}))
    return res


def _scale(op: BlockMap, c) -> BlockMap:
    if c == 1:
        return op
    return {s: (t, [[x * c if x else x for x in row] for row in m]) for s, (t, m) in op.items()}
