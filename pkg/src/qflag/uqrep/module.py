"""
Weight modules with block-sparse divided-power operators.

A :class:`WeightModule` is a finite-dimensional X-graded vector space
over a coefficient field.  Operators are stored per source weight: the
block of ``e_i^(n)`` at weight ``mu`` is a dense matrix from the ``mu``
weight space to the ``mu + n alpha_i`` weight space (rows index the
target).  Only a few generating operators are stored; every other
divided power is derived on demand and cached:

* ``e_i^(n) = e_i e_i^(n-1) / [n]_{q_i}`` while ``[n]_{q_i} != 0``;
* once ``[r]_{q_i} = 0`` in the field, ``e_i^(r)`` must be stored and
  ``e_i^(s) e_i^(n-s) = [n choose s]_{q_i} e_i^(n)`` with a nonvanishing
  q-binomial gives the rest.

The Cartan part is never stored: ``k_y`` acts on the ``mu`` weight space
by ``q^<mu, y>``.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from ..linalg import identity, matmul, zeros
from ..qarith import Field, q_binomial
from ..rootdata import RootDatum, Weight

__all__ = ["WeightModule", "TensorModule", "BlockMap", "compose", "block_apply", "dump_module"]

Matrix = list[list]
# source weight -> matrix into the (implied or recorded) target weight space
BlockMap = dict[Weight, tuple[Weight, Matrix]]


def compose(outer: BlockMap, inner: BlockMap) -> BlockMap:
    """outer o inner."""
    out: BlockMap = {}
    for src, (mid, m) in inner.items():
        o = outer.get(mid)
        if o is None:
            continue
        tgt, m2 = o
        prod = matmul(m2, m)
        if any(x for row in prod for x in row):
            out[src] = (tgt, prod)
    return out


def block_apply(op: BlockMap, vec: Mapping[Weight, Sequence], zero=0) -> dict[Weight, list]:
    """Apply a block map to a vector stored as ``{weight: coordinates}``."""
    out: dict[Weight, list] = {}
    for wt, coords in vec.items():
        blk = op.get(wt)
        if blk is None:
            continue
        tgt, m = blk
        res = []
        for row in m:
            acc = zero
            for x, y in zip(row, coords):
                if x and y:
                    acc = acc + x * y
            res.append(acc)
        if tgt in out:
            out[tgt] = [a + b for a, b in zip(out[tgt], res)]
        else:
            out[tgt] = res
    return {w: c for w, c in out.items() if any(c)}


class WeightModule:
    """A finite-dimensional weight module.

    INPUT:

    - ``datum`` -- the root datum.
    - ``field`` -- the coefficient field.
    - ``dims`` -- mapping weight -> dimension of the weight space.
    - ``base_ops`` -- mapping ``(kind, i, n)`` -> ``{src weight: matrix}`` with
      ``kind`` in ``{"e", "f"}``; must contain ``n = 1`` for every node and
      ``n = r_i`` whenever ``[r_i]_{q_i}`` vanishes in the field.
    - ``label`` -- a short description used in reports.
    """

    def __init__(self, datum: RootDatum, field: Field, dims: Mapping[Weight, int],
                 base_ops: Mapping[tuple[str, int, int], Mapping[Weight, Matrix]] | None = None,
                 label: str = ""):
        self.datum = datum
        self.field = field
        self.dims = {w: d for w, d in dims.items() if d > 0}
        self.weights = sorted(self.dims, key=self._weight_key)
        self.label = label
        self._ops: dict[tuple[str, int, int], BlockMap] = {}
        for (kind, i, n), blocks in (base_ops or {}).items():
            self._ops[(kind, i, n)] = self._as_blockmap(kind, i, n, blocks)
        self._cache: dict = {}

    # -- bookkeeping ----------------------------------------------------
    def _weight_key(self, w: Weight):
        # higher weights first: sort by decreasing pairing with rho^vee (as fractions)
        coords = self.datum.to_root_coords(w)
        return (-sum(coords), tuple(-x for x in w))

    def _as_blockmap(self, kind: str, i: int, n: int, blocks: Mapping[Weight, Matrix]) -> BlockMap:
        sign = 1 if kind == "e" else -1
        out: BlockMap = {}
        for src, m in blocks.items():
            tgt = self.datum.shift(src, i, sign * n)
            if any(x for row in m for x in row):
                out[src] = (tgt, m)
        return out

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    def dim_at(self, w: Weight) -> int:
        return self.dims.get(tuple(w), 0)

    def offsets(self) -> dict[Weight, int]:
        out, off = {}, 0
        for w in self.weights:
            out[w] = off
            off += self.dims[w]
        return out

    def basis_labels(self) -> list[tuple[Weight, int]]:
        return [(w, k) for w in self.weights for k in range(self.dims[w])]

    def character(self) -> dict[Weight, int]:
        return dict(self.dims)

    def __repr__(self) -> str:
        return f"<WeightModule {self.label or '?'} dim={self.dim} over {self.field}>"

    # -- Cartan part ------------------------------------------------------
    def k_scalar(self, w: Weight, y: Sequence[int]):
        """Scalar by which k_y acts on the ``w`` weight space."""
        return self.field.qpow(self.datum.pair(w, y))

    def ki_scalar(self, w: Weight, i: int, power: int = 1):
        """Scalar of k_i^power = k_{power d_i alpha_i^vee} on weight ``w``."""
        return self.field.qpow(power * self.datum.d[i] * w[i])

    # -- operators --------------------------------------------------------
    def op(self, kind: str, i: int, n: int) -> BlockMap:
        """Block map of ``e_i^(n)`` (kind ``"e"``) or ``f_i^(n)`` (``"f"``)."""
        if kind not in ("e", "f"):
            raise ValueError(f"unknown generator kind {kind!r}")
        key = (kind, i, n)
        got = self._ops.get(key)
        if got is None:
            got = self._compute_op(kind, i, n)
            self._ops[key] = got
        return got

    def stored_ops(self) -> dict[tuple[str, int, int], BlockMap]:
        return dict(self._ops)

    def identity_map(self) -> BlockMap:
        f = self.field
        return {w: (w, identity(self.dims[w], f.one, f.zero)) for w in self.weights}

    def vanishing_order(self, i: int) -> int | None:
        return self.field.vanishing_order(self.datum.d[i])

    def _compute_op(self, kind: str, i: int, n: int) -> BlockMap:
        f = self.field
        if n == 0:
            return self.identity_map()
        if n < 0:
            raise ValueError("negative divided power")
        di = self.datum.d[i]
        r = self.vanishing_order(i)
        if r is None or n < r:
            prev = self.op(kind, i, n - 1)
            one = self.op(kind, i, 1)
            inv = 1 / f.qint(n, di)
            return _scaled(compose(one, prev), inv)
        if n == r:
            raise KeyError(f"{kind}_{i}^({r}) must be stored for {self.field}")
        s = n % r or r
        coef = f.from_laurent(q_binomial(n, s).substitute_power(di))
        if not coef:
            raise ArithmeticError(f"q-binomial ({n} choose {s}) vanishes in {self.field}")
        prod = compose(self.op(kind, i, s), self.op(kind, i, n - s))
        return _scaled(prod, 1 / coef)

    def max_power(self, kind: str, i: int, w: Weight) -> int:
        """Largest n with ``w -+ n alpha_i`` a weight of the module."""
        sign = 1 if kind == "e" else -1
        n = 0
        while self.datum.shift(w, i, sign * (n + 1)) in self.dims:
            n += 1
        return n

    def apply(self, kind: str, i: int, n: int, vec: Mapping[Weight, Sequence]) -> dict[Weight, list]:
        return block_apply(self.op(kind, i, n), vec, self.field.zero)

    def zero_vector(self, w: Weight) -> dict[Weight, list]:
        return {w: [self.field.zero] * self.dims[w]}

    def unit_vector(self, w: Weight, k: int = 0) -> dict[Weight, list]:
        f = self.field
        return {w: [f.one if j == k else f.zero for j in range(self.dims[w])]}


def _scaled(op: BlockMap, c) -> BlockMap:
    out: BlockMap = {}
    for src, (tgt, m) in op.items():
        out[src] = (tgt, [[x * c if x else x for x in row] for row in m])
    return out


class TensorModule(WeightModule):
    """The tensor product ``A (x) B`` with the coproduct action.

    The basis of the ``nu`` weight space lists, for each pair of weights
    ``(mu1, mu2)`` with ``mu1 + mu2 = nu`` in lexicographic order of the
    factor weight orders, the products ``a_s (x) b_t`` with ``s`` major.
    Divided powers act by

    * e_i^(n) -> sum_{a+b=n} q_i^{ab} e_i^(a) k_i^b (x) e_i^(b),
    * f_i^(n) -> sum_{a+b=n} q_i^{ab} f_i^(b) (x) f_i^(a) k_i^{-b}.
    """

    def __init__(self, a: WeightModule, b: WeightModule, label: str = ""):
        if a.field is not b.field:
            raise ValueError("tensor factors must share a coefficient field")
        if a.datum.key != b.datum.key:
            raise ValueError("tensor factors must share a root datum")
        datum = a.datum
        blocks: dict[Weight, list[tuple[Weight, Weight]]] = {}
        rank_a = {w: k for k, w in enumerate(a.weights)}
        rank_b = {w: k for k, w in enumerate(b.weights)}
        for wa in a.weights:
            for wb in b.weights:
                nu = datum.add(wa, wb)
                blocks.setdefault(nu, []).append((wa, wb))
        dims = {}
        self.pair_offsets: dict[Weight, dict[tuple[Weight, Weight], int]] = {}
        for nu, pairs in blocks.items():
            pairs.sort(key=lambda p: (rank_a[p[0]], rank_b[p[1]]))
            off = 0
            table = {}
            for wa, wb in pairs:
                table[(wa, wb)] = off
                off += a.dims[wa] * b.dims[wb]
            self.pair_offsets[nu] = table
            dims[nu] = off
        self.factors = (a, b)
        super().__init__(datum, a.field, dims, None,
                         label or f"({a.label})x({b.label})")

    def index(self, wa: Weight, sa: int, wb: Weight, sb: int) -> tuple[Weight, int]:
        """Position of ``a_{wa,sa} (x) b_{wb,sb}``."""
        nu = self.datum.add(wa, wb)
        return nu, self.pair_offsets[nu][(wa, wb)] + sa * self.factors[1].dims[wb] + sb

    def tensor_vectors(self, x: Mapping[Weight, Sequence], y: Mapping[Weight, Sequence]) -> dict[Weight, list]:
        """The vector ``x (x) y``."""
        a, b = self.factors
        f = self.field
        out: dict[Weight, list] = {}
        for wa, xa in x.items():
            for wb, yb in y.items():
                nu = self.datum.add(wa, wb)
                vec = out.setdefault(nu, [f.zero] * self.dims[nu])
                off = self.pair_offsets[nu][(wa, wb)]
                db = b.dims[wb]
                for s, u in enumerate(xa):
                    if not u:
                        continue
                    for t, v in enumerate(yb):
                        if v:
                            vec[off + s * db + t] = vec[off + s * db + t] + u * v
        return {w: c for w, c in out.items() if any(c)}

    def tensor_maps(self, ma: BlockMap, mb: BlockMap, target: "TensorModule | None" = None) -> BlockMap:
        """The block map of ``ma (x) mb`` (into ``target``, default ``self``)."""
        target = target or self
        f = self.field
        out: BlockMap = {}
        a, b = self.factors
        for nu in self.weights:
            for (wa, wb), off in self.pair_offsets[nu].items():
                ea = ma.get(wa)
                eb = mb.get(wb)
                if ea is None or eb is None:
                    continue
                ta, mat_a = ea
                tb, mat_b = eb
                tnu = target.datum.add(ta, tb)
                toff = target.pair_offsets[tnu][(ta, tb)]
                _, blk = out.setdefault(nu, (tnu, zeros(target.dims[tnu], self.dims[nu], f.zero)))
                _kron_add(blk, toff, off, mat_a, mat_b, b.dims[wb], target.factors[1].dims[tb], 1)
        return {w: v for w, v in out.items() if any(x for row in v[1] for x in row)}

    def _compute_op(self, kind: str, i: int, n: int) -> BlockMap:
        if n == 0:
            return self.identity_map()
        a, b = self.factors
        datum = self.datum
        f = self.field
        di = datum.d[i]
        sign = 1 if kind == "e" else -1
        out: dict[Weight, tuple[Weight, Matrix]] = {}
        ops_a = [a.op(kind, i, k) for k in range(n + 1)]
        ops_b = [b.op(kind, i, k) for k in range(n + 1)]
        for nu in self.weights:
            tnu = datum.shift(nu, i, sign * n)
            if tnu not in self.dims:
                continue
            blk = None
            for (wa, wb), off in self.pair_offsets[nu].items():
                for s in range(n + 1):
                    t = n - s
                    # e: a-part gets e^(s), b-part e^(t), coefficient q_i^{st + t<wa,ai>}
                    # f: a-part gets f^(t), b-part f^(s), coefficient q_i^{st - t<wb,ai>}
                    if kind == "e":
                        ka, kb = s, t
                        expo = s * t + t * wa[i]
                    else:
                        ka, kb = t, s
                        expo = s * t - t * wb[i]
                    ea = ops_a[ka].get(wa)
                    eb = ops_b[kb].get(wb)
                    if ea is None or eb is None:
                        continue
                    ta, mat_a = ea
                    tb, mat_b = eb
                    toff = self.pair_offsets[tnu][(ta, tb)]
                    if blk is None:
                        blk = zeros(self.dims[tnu], self.dims[nu], f.zero)
                    _kron_add(blk, toff, off, mat_a, mat_b, b.dims[wb], b.dims[tb],
                              f.qpow(di * expo))
            if blk is not None and any(x for row in blk for x in row):
                out[nu] = (tnu, blk)
        return out


def _kron_add(blk: Matrix, toff: int, off: int, ma: Matrix, mb: Matrix,
              db_src: int, db_tgt: int, coef) -> None:
    """blk[toff + r1*db_tgt + r2][off + c1*db_src + c2] += coef*ma[r1][c1]*mb[r2][c2]."""
    nz_b = [(r2, c2, y, y == 1) for r2, row in enumerate(mb) for c2, y in enumerate(row) if y]
    if not nz_b:
        return
    for r1, row in enumerate(ma):
        for c1, x in enumerate(row):
            if not x:
                continue
            cx = coef * x if coef != 1 else x
            rbase = toff + r1 * db_tgt
            cbase = off + c1 * db_src
            for r2, c2, y, unit in nz_b:
                target_row = blk[rbase + r2]
                target_row[cbase + c2] = target_row[cbase + c2] + (cx if unit else cx * y)


def dump_module(M: WeightModule, max_n: int = 1) -> str:
    """Stable text serialization of ``M``.

    Lines are ``weight <w> <dim>`` in basis order, then
    ``op <gen> <from> <to> <scalar>`` for every nonzero matrix entry of
    ``e_i^(n)``, ``f_i^(n)`` with ``n <= max_n``, indices global 0-based.

    EXAMPLES::

        >>> from qflag.rootdata import build_root_datum
        >>> from qflag.uqrep import fundamental_module
        >>> print(dump_module(fundamental_module(build_root_datum("A1"), 0)))
        module V(w1)
        field generic
        weight (1,) 1
        weight (-1,) 1
        op e_1^(1) 1 0 1
        op f_1^(1) 0 1 1
    """
    off = M.offsets()
    lines = [f"module {M.label}", f"field {M.field}"]
    for w in M.weights:
        lines.append(f"weight ({','.join(map(str, w))}{',' if len(w) == 1 else ''}) {M.dims[w]}")
    for kind in ("e", "f"):
        for i in M.datum.nodes:
            for n in range(1, max_n + 1):
                entries = []
                for src, (tgt, m) in M.op(kind, i, n).items():
                    for r, row in enumerate(m):
                        for c, x in enumerate(row):
                            if x:
                                entries.append((off[src] + c, off[tgt] + r, M.field.fmt(x)))
                for a, b, s in sorted(entries):
                    lines.append(f"op {kind}_{i + 1}^({n}) {a} {b} {s}")
    return "\n".join(lines)
