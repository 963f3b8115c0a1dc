"""
Braid group operators on integrable modules.

On a vector ``v`` of weight ``lam`` with ``m = <lam, alpha_i^vee>``::

    T_i v    = sum_{a-b+c=m} (-1)^b q_i^{b-ac} f_i^(a) e_i^(b) f_i^(c) v
    Tbar_i v = sum_{a-b+c=m} (-1)^b f(i,a) e(i,b) f(i,c) v

where ``e(i,n)``, ``f(i,n)`` are the rescaled divided powers of
:mod:`qflag.uqrep.generators` (so ``Tbar_i`` is the classical operator,
available when ``q_i = +-1``).  Composites along a reduced word are
cached on the module.  The sign comparison ``Tbar_w v = eps_{w,lam} T_w v``
is computed by :func:`epsilon_sign`.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .linalg import matmul, rank, zeros
from .report import CheckResult
from .rootdata import RootDatum, Weight
from .uqrep.generators import Generator, check_J, generator_map
from .uqrep.module import BlockMap, TensorModule, WeightModule, block_apply, compose
from .uqrep.relations import map_residual

__all__ = ["braid_map", "braid_word_map", "apply_Ti", "apply_Tbar", "apply_Tw",
           "epsilon_sign", "verify_braid_relations", "verify_reduced_word_independence",
           "verify_weight_mapping", "verify_tensor_braid", "verify_sign_identity", "verify_braid"]


def _single(M: WeightModule, i: int, classical: bool, J: frozenset[int] | None) -> BlockMap:
    datum = M.datum
    F = M.field
    di = datum.d[i]
    if classical:
        if F.qpow(2 * di) != F.one:
            raise ValueError(f"Tbar needs q_{i + 1} = +-1, not available over {F}")

        def E(n):
            return generator_map(M, Generator("E", i, n), J)

        def Fo(n):
            return generator_map(M, Generator("F", i, n), J)
    else:
        def E(n):
            return M.op("e", i, n)

        def Fo(n):
            return M.op("f", i, n)

    out: BlockMap = {}
    for lam in M.weights:
        m = lam[i]
        tgt = datum.reflect(i, lam)
        acc = zeros(M.dims[tgt], M.dims[lam], F.zero)
        hit = False
        for c in range(M.max_power("f", i, lam) + 1):
            mu1 = datum.shift(lam, i, -c)
            blk_c = Fo(c).get(lam) if c else (lam, None)
            if blk_c is None:
                continue
            for b in range(M.max_power("e", i, mu1) + 1):
                a = m + b - c
                if a < 0:
                    continue
                mu2 = datum.shift(mu1, i, b)
                if a > M.max_power("f", i, mu2):
                    continue
                blk_b = E(b).get(mu1) if b else (mu1, None)
                blk_a = Fo(a).get(mu2) if a else (mu2, None)
                if blk_b is None or blk_a is None:
                    continue
                mat = _chain([blk_a[1], blk_b[1], blk_c[1]], M.dims[lam], F)
                coef = F.one if b % 2 == 0 else -F.one
                if not classical:
                    coef = coef * F.qpow(di * (b - a * c))
                for r, row in enumerate(mat):
                    arow = acc[r]
                    for k, x in enumerate(row):
                        if x:
                            arow[k] = arow[k] + coef * x
                hit = True
        if hit and any(x for row in acc for x in row):
            out[lam] = (tgt, acc)
    return out


def _chain(mats, n, F):
    """Product of the non-``None`` matrices (rightmost applied first)."""
    out = None
    for m in reversed(mats):
        if m is None:
            continue
        out = m if out is None else matmul(m, out, F.zero)
    if out is None:
        return [[F.one if r == c else F.zero for c in range(n)] for r in range(n)]
    return out


def _resolve_J(M: WeightModule, J) -> frozenset[int]:
    return check_J(M.datum, M.datum.bipartition_J() if J is None else J)


def braid_map(M: WeightModule, i: int, classical: bool = False, J: Iterable[int] | None = None) -> BlockMap:
    """Block map of ``T_i`` (or ``Tbar_i``) on ``M``, cached on the module."""
    Jset = _resolve_J(M, J) if classical else None
    key = ("T", i, classical, Jset)
    cache = M._cache
    if key not in cache:
        cache[key] = _single(M, i, classical, Jset)
    return cache[key]


def braid_word_map(M: WeightModule, word: Sequence[int], classical: bool = False,
                   J: Iterable[int] | None = None) -> BlockMap:
    """``T_{i_1} ... T_{i_N}`` for a reduced word ``(i_1, ..., i_N)``.

    Non-reduced words are rejected.
    """
    word = tuple(word)
    M.datum.element(word)  # raises on non-reduced words
    Jset = _resolve_J(M, J) if classical else None
    key = ("Tw", word, classical, Jset)
    cache = M._cache
    if key in cache:
        return cache[key]
    if not word:
        out = M.identity_map()
    elif len(word) == 1:
        out = braid_map(M, word[0], classical, Jset)
    else:
        out = compose(braid_map(M, word[0], classical, Jset), braid_word_map(M, word[1:], classical, Jset))
    cache[key] = out
    return out


def _homogeneous(v: Mapping[Weight, Sequence]) -> Weight:
    nz = [w for w, c in v.items() if any(c)]
    if len(nz) > 1:
        raise ValueError("braid operators are applied to homogeneous vectors")
    return nz[0] if nz else next(iter(v), None)


def apply_Ti(M: WeightModule, i: int, v: Mapping[Weight, Sequence]) -> dict[Weight, list]:
    """``T_i v`` for a homogeneous vector ``v``.

    EXAMPLES::

        >>> from qflag.rootdata import build_root_datum
        >>> from qflag.uqrep import nabla_module
        >>> M = nabla_module(build_root_datum("A1"), (1,))
        >>> apply_Ti(M, 0, M.unit_vector((1,)))
        {(-1,): [1]}
    """
    _homogeneous(v)
    return block_apply(braid_map(M, i), v, M.field.zero)


def apply_Tbar(M: WeightModule, i: int, v: Mapping[Weight, Sequence],
               J: Iterable[int] | None = None) -> dict[Weight, list]:
    """The classical ``Tbar_i v`` (needs ``q_i = +-1``)."""
    _homogeneous(v)
    return block_apply(braid_map(M, i, True, J), v, M.field.zero)


def apply_Tw(M: WeightModule, word: Sequence[int], v: Mapping[Weight, Sequence],
             classical: bool = False, J: Iterable[int] | None = None) -> dict[Weight, list]:
    _homogeneous(v)
    return block_apply(braid_word_map(M, word, classical, J), v, M.field.zero)


def epsilon_sign(datum: RootDatum, word: Sequence[int], lam: Sequence[int], ell: int,
                 J: Iterable[int] | None = None, rule: str = "derived") -> int:
    """The sign ``eps_{w, lam}`` with ``Tbar_w v = eps T_w v`` on weight ``lam``.

    For a simple reflection, with ``m = <lam, alpha_i^vee>`` and
    ``zeta_i = zeta^{d_i}``, expanding both sums term by term gives
    ``zeta_i^{m(m-1)/2}`` whether or not ``i`` lies in ``J``
    (``rule="derived"``).  ``rule="stated"`` uses ``zeta_i^{m(m+1)/2}`` for
    ``i`` outside ``J`` instead; it differs by ``zeta_i^m`` and fails the
    identity for odd ``m`` (kept for comparison).  Composites follow
    ``eps_{s_i w, lam} = eps_{s_i, w lam} eps_{w, lam}``.

    EXAMPLES::

        >>> from qflag.rootdata import build_root_datum
        >>> A1 = build_root_datum("A1")
        >>> epsilon_sign(A1, (0,), (2,), 2)
        -1
        >>> epsilon_sign(A1, (0,), (1,), 2, J=()), epsilon_sign(A1, (0,), (1,), 2, J=(), rule="stated")
        (1, -1)
    """
    if ell not in (1, 2):
        raise ValueError("epsilon_sign is defined when zeta = +-1 on every root")
    if rule not in ("derived", "stated"):
        raise ValueError(f"unknown sign rule {rule!r}")
    Jset = check_J(datum, datum.bipartition_J() if J is None else J)
    zeta = 1 if ell == 1 else -1
    eps = 1
    cur = tuple(lam)
    for i in reversed(tuple(word)):
        m = cur[i]
        zi = zeta ** datum.d[i]
        if rule == "stated" and i not in Jset:
            expo = m * (m + 1) // 2
        else:
            expo = m * (m - 1) // 2
        eps *= zi ** (expo % 2)
        cur = datum.reflect(i, cur)
    return eps


# ---------------------------------------------------------------------------
# checks


def _braid_order(datum: RootDatum, i: int, j: int) -> int:
    prod = datum.cartan[i][j] * datum.cartan[j][i]
    return {0: 2, 1: 3, 2: 4, 3: 6}[prod]


def verify_braid_relations(M: WeightModule, classical: bool = False, J=None) -> CheckResult:
    """Alternating products of ``T_i``, ``T_j`` of length ``m_ij`` agree."""
    res = CheckResult(f"braid-relations[{M.label}]")
    datum = M.datum
    for i in datum.nodes:
        for j in datum.nodes:
            if i >= j:
                continue
            m = _braid_order(datum, i, j)
            w1 = tuple(i if k % 2 == 0 else j for k in range(m))
            w2 = tuple(j if k % 2 == 0 else i for k in range(m))
            lhs = _product(M, w1, classical, J)
            rhs = _product(M, w2, classical, J)
            diff = map_residual(M, lhs, rhs)
            res.record(not diff, module=M.label, i=i + 1, j=j + 1, classical=classical,
                       weights=[list(w) for w in diff][:3])
    return res


def _product(M, word, classical, J):
    out = M.identity_map()
    for i in reversed(word):
        out = compose(braid_map(M, i, classical, J), out)
    return out


def verify_reduced_word_independence(M: WeightModule, classical: bool = False, J=None) -> CheckResult:
    """All reduced words of every Weyl group element give the same operator."""
    res = CheckResult(f"reduced-words[{M.label}]")
    datum = M.datum
    for w in datum.weyl_group():
        words = _reduced_words(datum, w.word)
        base = braid_word_map(M, words[0], classical, J)
        for other in words[1:]:
            diff = map_residual(M, base, braid_word_map(M, other, classical, J))
            res.record(not diff, module=M.label, words=[list(words[0]), list(other)])
    return res


def _reduced_words(datum: RootDatum, word: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All reduced words for the element with reduced word ``word``."""
    target = datum.element(word).matrix
    n = len(word)
    out = []

    def extend(prefix):
        if len(prefix) == n:
            if datum.element(prefix).matrix == target:
                out.append(prefix)
            return
        for i in datum.nodes:
            cand = prefix + (i,)
            try:
                datum.element(cand)
            except ValueError:
                continue
            extend(cand)

    extend(())
    return out


def verify_weight_mapping(M: WeightModule) -> CheckResult:
    """``T_w`` maps the ``mu`` weight space isomorphically onto ``w mu``."""
    res = CheckResult(f"weight-mapping[{M.label}]")
    datum = M.datum
    for w in datum.weyl_group():
        op = braid_word_map(M, w.word)
        for mu in M.weights:
            blk = op.get(mu)
            ok = blk is not None and blk[0] == w.act(mu) and rank(blk[1]) == M.dims[mu]
            res.record(ok, module=M.label, w=list(w.word), weight=list(mu))
    return res


def verify_tensor_braid(A: WeightModule, B: WeightModule, hypothesis: str = "first-e-null") -> CheckResult:
    """Tensor rules for ``T_i`` on ``A (x) B``.

    Part (ii), ``T_i = T_i (x) T_i``, is checked when ``q_i^2 = 1``.  Part (i),
    ``T_i(v1 (x) v2) = T_i v1 (x) T_i v2``, is checked on basis vectors
    singled out by ``hypothesis``:

    ``"first-e-null"``
        ``v1`` killed by every ``e_i^(n)``, ``n > 0``;
    ``"second-e-null"``
        ``v2`` killed by every ``e_i^(n)``;
    ``"first-f-null"``
        ``v1`` killed by every ``f_i^(n)``.

    With the coproduct ``e_i -> e_i (x) 1 + k_i (x) e_i`` the last two hold
    and the first one fails already for ``V(w) (x) V(w)`` of A1 at generic q.
    """
    if hypothesis not in ("first-e-null", "second-e-null", "first-f-null"):
        raise ValueError(f"unknown hypothesis {hypothesis!r}")
    AB = TensorModule(A, B)
    F = AB.field
    datum = AB.datum
    res = CheckResult(f"tensor-braid[{AB.label}]", data={"hypothesis": hypothesis})

    def null(M, kind, i, w, v):
        return not any(M.apply(kind, i, n, v) for n in range(1, M.max_power(kind, i, w) + 1))

    for i in datum.nodes:
        TA, TB, TAB = braid_map(A, i), braid_map(B, i), braid_map(AB, i)
        if F.qpow(2 * datum.d[i]) == F.one:
            diff = map_residual(AB, TAB, AB.tensor_maps(TA, TB))
            res.record(not diff, part="ii", i=i + 1, weights=[list(w) for w in diff][:3])
        for wa in A.weights:
            for sa in range(A.dims[wa]):
                v1 = A.unit_vector(wa, sa)
                if hypothesis == "first-e-null" and not null(A, "e", i, wa, v1):
                    continue
                if hypothesis == "first-f-null" and not null(A, "f", i, wa, v1):
                    continue
                tv1 = block_apply(TA, v1, F.zero)
                for wb in B.weights:
                    for sb in range(B.dims[wb]):
                        v2 = B.unit_vector(wb, sb)
                        if hypothesis == "second-e-null" and not null(B, "e", i, wb, v2):
                            continue
                        lhs = block_apply(TAB, AB.tensor_vectors(v1, v2), F.zero)
                        rhs = AB.tensor_vectors(tv1, block_apply(TB, v2, F.zero))
                        res.record(_vec_equal(lhs, rhs), part="i", i=i + 1, v1=[list(wa), sa],
                                   v2=[list(wb), sb])
    return res


def _vec_equal(x, y) -> bool:
    keys = set(x) | set(y)
    for k in keys:
        a, b = x.get(k), y.get(k)
        if a is None:
            if any(b):
                return False
        elif b is None:
            if any(a):
                return False
        elif any(p != q for p, q in zip(a, b)):
            return False
    return True


def verify_sign_identity(M: WeightModule, J: Iterable[int] | None = None,
                      rule: str = "derived") -> CheckResult:
    """``Tbar_w v = eps_{w,lam} T_w v`` on every weight space, for every ``w``."""
    F = M.field
    ell = F.ell
    if ell not in (1, 2):
        raise ValueError("the sign identity needs zeta = +-1")
    datum = M.datum
    Jset = _resolve_J(M, J)
    res = CheckResult(f"sign-identity[{M.label}]", data={"J": sorted(j + 1 for j in Jset), "rule": rule})
    for w in datum.weyl_group():
        T = braid_word_map(M, w.word)
        Tb = braid_word_map(M, w.word, True, Jset)
        for lam in M.weights:
            eps = epsilon_sign(datum, w.word, lam, ell, Jset, rule)
            blk, blkb = T.get(lam), Tb.get(lam)
            ok = blk is not None and blkb is not None and blk[0] == blkb[0] and all(
                y == eps * x for ra, rb in zip(blk[1], blkb[1]) for x, y in zip(ra, rb))
            res.record(ok, module=M.label, w=list(w.word), weight=list(lam), eps=eps)
    return res


def verify_braid(M: WeightModule, J=None) -> CheckResult:
    """Braid relations, reduced-word independence and weight mapping on ``M``
    (plus the classical operators and the sign identity when ``zeta = +-1``)."""
    res = CheckResult(f"braid[{M.label}]")
    res.merge(verify_braid_relations(M))
    res.merge(verify_reduced_word_independence(M))
    res.merge(verify_weight_mapping(M))
    if M.field.ell in (1, 2):
        res.merge(verify_braid_relations(M, True, J))
        res.merge(verify_sign_identity(M, J))
    return res
