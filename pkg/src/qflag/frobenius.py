"""
Quantum Frobenius pullback and the extremal weight isomorphisms.

Let ``zeta`` have order ``ell`` and let ``sd`` be the rescaled datum
(:func:`qflag.rootdata.sharp_datum`).  A module ``N`` over the rescaled
datum at the same ``zeta`` becomes a module over the original one by

    e_i^(n) -> e_i^(n / r_i) if r_i | n, else 0,

and likewise for ``f``; a weight ``mu`` of ``N`` is viewed as the weight
``sum_i r_i mu_i varpi_i`` of the original datum.

For ``lam`` in the rescaled lattice there are module maps

    Delta(lam) -> Delta#(lam) -> nabla#(lam) -> nabla(lam)

(the outer ones pulled back along Frobenius) which are isomorphisms on
every extremal weight space ``w lam``; :func:`verify_extremal_iso` checks
this, together with the canonical map ``Delta(lam) -> nabla(lam)`` being
nonzero there.
"""
from __future__ import annotations

from typing import Sequence

from .report import CheckResult
from .rootdata import RootDatum, SharpDatum, Weight, sharp_datum
from .uqrep.homs import module_hom
from .uqrep.lattice import specialize_weyl, weyl_lattice
from .uqrep.module import BlockMap, TensorModule, WeightModule, block_apply, compose
from .uqrep.relations import verify_relations

__all__ = ["PullbackModule", "frobenius_pullback", "verify_pullback", "verify_pullback_tensor",
           "verify_extremal_iso"]


class PullbackModule(WeightModule):
    """The Frobenius pullback of a module ``sharp`` over ``sd.datum``."""

    def __init__(self, sharp: WeightModule, sd: SharpDatum, label: str = ""):
        if sharp.datum.key != sd.datum.key:
            raise ValueError("module is not over the rescaled datum")
        if sharp.field.ell != sd.ell:
            raise ValueError(f"module lives at {sharp.field}, the rescaled datum at ell={sd.ell}")
        self.sharp = sharp
        self.sd = sd
        dims = {sd.from_sharp(w): d for w, d in sharp.dims.items()}
        super().__init__(sd.source, sharp.field, dims, None, label or f"F*({sharp.label})")

    def _compute_op(self, kind: str, i: int, n: int) -> BlockMap:
        if n == 0:
            return self.identity_map()
        r = self.sd.r_nodes[i]
        if n % r:
            return {}
        out: BlockMap = {}
        for src, (tgt, m) in self.sharp.op(kind, i, n // r).items():
            out[self.sd.from_sharp(src)] = (self.sd.from_sharp(tgt), m)
        return out


def frobenius_pullback(sharp: WeightModule, sd: SharpDatum) -> PullbackModule:
    """Pull ``sharp`` back along quantum Frobenius.

    EXAMPLES::

        >>> from qflag.rootdata import build_root_datum, sharp_datum
        >>> from qflag.uqrep import nabla_module
        >>> sd = sharp_datum(build_root_datum("A1"), 3)
        >>> P = frobenius_pullback(nabla_module(sd.datum, (1,), 3), sd)
        >>> sorted(P.dims), P.op("f", 0, 1), P.op("f", 0, 3)
        ([(-3,), (3,)], {}, {(3,): ((-3,), [[1]])})
    """
    return PullbackModule(sharp, sd)


def verify_pullback(sharp: WeightModule, sd: SharpDatum) -> CheckResult:
    """Relations of the original algebra on the pullback of ``sharp``."""
    P = frobenius_pullback(sharp, sd)
    res = CheckResult(f"pullback[{P.label}]")
    for w in P.weights:
        res.record(sd.contains(w), relation="weight-in-sharp-lattice", weight=list(w))
    bound = max([1] + [sd.r_nodes[i] * max(sharp.max_power("e", i, w) for w in sharp.weights)
                       for i in sharp.datum.nodes])
    res.merge(verify_relations(P, max_n=min(bound, 2 * max(sd.r_nodes) + 1)))
    return res


def verify_pullback_tensor(A: WeightModule, B: WeightModule, sd: SharpDatum) -> CheckResult:
    """Pullback of ``A (x) B`` equals the tensor product of the pullbacks,
    compared entry by entry on matching basis labels ``a (x) b``."""
    T = TensorModule(A, B)
    P1 = frobenius_pullback(T, sd)
    P2 = TensorModule(frobenius_pullback(A, sd), frobenius_pullback(B, sd))
    fs = sd.from_sharp

    def labels1(nu):
        return _labels(T, sd.to_sharp(nu), fs)

    def labels2(nu):
        return _labels(P2, nu, lambda w: w)

    res = CheckResult(f"pullback-tensor[{T.label}]")
    for i in sd.source.nodes:
        for kind in "ef":
            for n in range(1, 2 * max(sd.r_nodes) + 1):
                t1 = _table(P1.op(kind, i, n), labels1)
                t2 = _table(P2.op(kind, i, n), labels2)
                res.record(t1 == t2, generator=f"{kind}_{i + 1}^({n})")
    return res


def _labels(T: TensorModule, nu: Weight, fs) -> list:
    A, B = T.factors
    out = [None] * T.dims[nu]
    for (wa, wb), off in T.pair_offsets[nu].items():
        for sa in range(A.dims[wa]):
            for sb in range(B.dims[wb]):
                out[off + sa * B.dims[wb] + sb] = (fs(wa), sa, fs(wb), sb)
    return out


def _table(op: BlockMap, labels) -> dict:
    out = {}
    for src, (tgt, m) in op.items():
        ls, lt = labels(src), labels(tgt)
        for r, row in enumerate(m):
            for c, x in enumerate(row):
                if x:
                    out[(ls[c], lt[r])] = x
    return out


def verify_extremal_iso(datum: RootDatum, lam: Sequence[int], ell: int) -> CheckResult:
    """Extremal weight spaces of Delta(lam), nabla(lam) for ``lam`` in the
    rescaled lattice, and the chain of maps through the rescaled modules.

    For every ``w`` in the Weyl group: the ``w lam`` weight spaces of
    Delta, nabla and the two rescaled modules are 1-dimensional, the
    canonical map and each map of the chain are nonzero there, and the
    composite of the chain equals the canonical map.

    EXAMPLES::

        >>> from qflag.rootdata import build_root_datum
        >>> verify_extremal_iso(build_root_datum("A1"), (3,), 3).passed
        True
    """
    lam = tuple(lam)
    sd = sharp_datum(datum, ell)
    if not (sd.contains(lam) and datum.is_dominant(lam)):
        raise ValueError(f"{lam} is not a dominant weight of the rescaled lattice for ell={ell}")
    S = specialize_weyl(weyl_lattice(datum, lam, ell))
    lam_s = sd.to_sharp(lam)
    S_s = specialize_weyl(weyl_lattice(sd.datum, lam_s, ell))
    D, N = S.delta, S.nabla
    PD, PN = frobenius_pullback(S_s.delta, sd), frobenius_pullback(S_s.nabla, sd)
    res = CheckResult(f"extremal[{datum.type_label} {lam} ell={ell}]")

    maps = {}
    for name, (X, Y) in {"Delta->Delta#": (D, PD), "nabla#->nabla": (PN, N)}.items():
        h = module_hom(X, Y, X.unit_vector(lam), Y.unit_vector(lam))
        res.record(h.exists, step=name, reason="no module map with v_lam -> v_lam")
        maps[name] = h.blocks or {}
        res.data[f"freedom {name}"] = h.freedom
    maps["Delta#->nabla#"] = {sd.from_sharp(w): (sd.from_sharp(t), m) for w, (t, m) in S_s.canonical.items()}
    chain = compose(maps["nabla#->nabla"], compose(maps["Delta#->nabla#"], maps["Delta->Delta#"]))

    dims = {}
    for w in datum.weyl_group():
        mu = w.act(lam)
        dims[w.word_str()] = [M.dim_at(mu) for M in (D, PD, PN, N)]
        for M, name in ((D, "Delta"), (PD, "Delta#"), (PN, "nabla#"), (N, "nabla")):
            res.record(M.dim_at(mu) == 1, w=w.word_str(), weight=list(mu), module=name,
                       dim=M.dim_at(mu))
        for name in ("Delta->Delta#", "Delta#->nabla#", "nabla#->nabla"):
            blk = maps[name].get(mu)
            res.record(blk is not None and any(x for row in blk[1] for x in row),
                       w=w.word_str(), weight=list(mu), map=name)
        can = S.canonical.get(mu)
        res.record(can is not None and any(x for row in can[1] for x in row),
                   w=w.word_str(), weight=list(mu), map="canonical")
        ch = chain.get(mu)
        same = can is not None and ch is not None and can[1] == ch[1]
        res.record(same, w=w.word_str(), weight=list(mu), map="chain == canonical")
    res.data["extremal_dims"] = dims
    return res
