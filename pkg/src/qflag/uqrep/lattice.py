"""
Weyl lattices, dual Weyl lattices and their specialization at q = zeta.

Construction
------------
Let O be the local ring at the cyclotomic place (or F itself in generic
mode).  For a dominant weight ``lam`` the module V(lam) is realized as a
quotient of an ambient module ``T`` (a fundamental model, or the tensor
product of the already built dual Weyl lattices of ``lam - varpi_i`` and
``varpi_i``) through the functionals

    Delta*_O(lam) = v*_lam . U^+_O  inside  T^*,

computed weight by weight as the O-span of ``p . e_i^(n)`` for basis
functionals ``p`` of higher weight, reduced by :func:`dvr_lattice_basis`.
By the triangular decomposition the f's and the Cartan part act on
``v*_lam`` through scalars, so e-words suffice.  Only ``n = 1`` and
``n = r_i`` (the first order with ``[r_i]_{zeta_i} = 0``) are needed: the
other divided powers are O-unit multiples of products of these.

The dual Weyl lattice nabla_O(lam) is the O-dual of Delta*_O(lam); its
coordinates are the values of the basis functionals, and operators are
found by expanding ``p . e_i`` and ``p . f_i`` in the functional basis.
The Weyl lattice Delta_O(lam) = U^-_O v_lam is then generated inside
nabla_O(lam) by f-words on the highest vector.  Residues of the
operator matrices give the modules over K = Q(zeta_l).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..linalg import vecmat
from ..qarith import LatticeBasis, Place, dvr_lattice_basis, field_for, place as make_place
from ..rootdata import RootDatum, Weight
from .fundamental import fundamental_module, trivial_module
from .module import BlockMap, TensorModule, WeightModule

__all__ = [
    "WeylLattice",
    "SpecializedWeyl",
    "weyl_lattice",
    "specialize_weyl",
    "nabla_module",
    "delta_module",
    "clear_caches",
    "SpecializationError",
]


class SpecializationError(ArithmeticError):
    """A coefficient with negative valuation appeared where the theory
    guarantees integrality."""


@dataclass
class WeylLattice:
    """Lattices attached to a dominant weight at a place.

    Attributes
    ----------
    nabla
        F-level module in coordinates dual to the Delta* basis; its
        coordinate lattice is nabla_O(lam).
    dual_rows
        weight -> :class:`LatticeBasis` of Delta*_O(lam) inside the ambient dual.
    ambient
        the module ``T`` whose dual contains Delta*.
    factors
        ``(lam1, lam2)`` when ``ambient`` is a tensor product of dual Weyl
        lattices, else ``None``.
    """

    datum: RootDatum
    lam: Weight
    place: Place | None
    nabla: WeightModule
    dual_rows: dict[Weight, LatticeBasis]
    ambient: WeightModule
    factors: tuple[Weight, Weight] | None
    _delta: tuple | None = dc_field(default=None, repr=False)

    @property
    def ell(self) -> int | None:
        return None if self.place is None else self.place.ell

    def delta(self) -> tuple[WeightModule, dict[Weight, LatticeBasis]]:
        """F-level Delta_O(lam) and its basis vectors in nabla coordinates."""
        if self._delta is None:
            self._delta = _delta_route(self)
        return self._delta

    def pairing_matrix(self, w: Weight):
        """Pairing of the Delta*_O basis with the Delta_O basis at weight ``w``."""
        _, bases = self.delta()
        return [list(col) for col in zip(*bases[w].rows)]


class SpecializedWeyl:
    """Delta_{K,zeta}(lam), nabla_{K,zeta}(lam) and the canonical map between them.

    ``delta`` and ``canonical`` are built on first access.
    """

    def __init__(self, lat: "WeylLattice"):
        self.lattice = lat
        self.lam = lat.lam
        if lat.place is None:
            self.field = lat.nabla.field
            self.nabla = lat.nabla
        else:
            self.field = field_for(lat.ell)
            self.nabla = _specialize_module(lat.nabla, self.field, f"nabla{lat.lam}[ell={lat.ell}]")
        self._delta = None
        self._canonical = None

    def _build_delta(self) -> None:
        lat = self.lattice
        delta_F, bases = lat.delta()
        if lat.place is None:
            self._delta = delta_F
            self._canonical = {w: (w, [list(col) for col in zip(*b.rows)]) for w, b in bases.items()}
            return
        K = self.field
        self._delta = _specialize_module(delta_F, K, f"delta{lat.lam}[ell={lat.ell}]")
        canon = {}
        for w, b in bases.items():
            mat = [list(col) for col in zip(*b.rows)]
            canon[w] = (w, _residue_block(K, mat, f"canonical map at {w}"))
        self._canonical = canon

    @property
    def delta(self) -> WeightModule:
        if self._delta is None:
            self._build_delta()
        return self._delta

    @property
    def canonical(self) -> BlockMap:
        if self._canonical is None:
            self._build_delta()
        return self._canonical

    def highest_vector(self) -> dict[Weight, list]:
        return self.nabla.unit_vector(self.lam)


_LATTICES: dict[tuple, WeylLattice] = {}
_SPECIAL: dict[tuple, SpecializedWeyl] = {}


def clear_caches() -> None:
    _LATTICES.clear()
    _SPECIAL.clear()


def _gen_orders(datum: RootDatum, pl: Place | None) -> dict[int, list[int]]:
    """Divided-power orders that generate U^+_O over O, per node."""
    K = field_for(None if pl is None else pl.ell)
    out = {}
    for i in datum.nodes:
        r = K.vanishing_order(datum.d[i])
        out[i] = [1] if r is None else [1, r]
    return out


def weyl_lattice(datum: RootDatum, lam, ell: int | None = None) -> WeylLattice:
    """The (dual) Weyl lattices of highest weight ``lam`` at the place of
    order ``ell`` (``None``: generic).

    EXAMPLES::

        >>> from qflag.rootdata import build_root_datum
        >>> L = weyl_lattice(build_root_datum("A1"), (2,), 3)
        >>> [L.nabla.dims[w] for w in L.nabla.weights]
        [1, 1, 1]
    """
    lam = tuple(lam)
    if not datum.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    key = (datum.key, lam, ell)
    got = _LATTICES.get(key)
    if got is not None:
        return got
    pl = make_place(ell)
    F = field_for(None)
    if not any(lam):
        T = trivial_module(datum, F)
        factors = None
    elif sum(lam) == 1:
        T = fundamental_module(datum, lam.index(1))
        factors = None
    else:
        best = None
        for i in datum.nodes:
            if lam[i] == 0:
                continue
            rest = tuple(x - (k == i) for k, x in enumerate(lam))
            cost = datum.weyl_dimension(rest) * datum.weyl_dimension(datum.fundamental_weight(i))
            if best is None or cost < best[0]:
                best = (cost, i, rest)
        _, i, rest = best
        wi = datum.fundamental_weight(i)
        T = TensorModule(weyl_lattice(datum, rest, ell).nabla, weyl_lattice(datum, wi, ell).nabla)
        factors = (rest, wi)
    nabla, rows = _dual_route(datum, T, lam, pl)
    if nabla.dim != datum.weyl_dimension(lam):
        raise ArithmeticError(f"dual Weyl lattice of {lam} has rank {nabla.dim}, "
                              f"expected {datum.weyl_dimension(lam)}")
    lat = WeylLattice(datum, lam, pl, nabla, rows, T, factors)
    _LATTICES[key] = lat
    return lat


def _below(datum: RootDatum, lam: Weight, weights) -> list[Weight]:
    """Weights ``nu`` with ``lam - nu`` in Q^+, by increasing depth."""
    cand = [w for w in weights if datum.in_root_cone(datum.add(lam, w, -1))]
    return sorted(cand, key=lambda w: (datum.height(datum.add(lam, w, -1)), tuple(-x for x in w)))


def _dual_route(datum: RootDatum, T: WeightModule, lam: Weight, pl: Place | None):
    F = T.field
    orders = _gen_orders(datum, pl)
    top = dvr_lattice_basis([[F.one]], pl)
    if T.dims.get(lam) != 1:
        raise ValueError("ambient must have a one-dimensional top weight space")
    rows: dict[Weight, LatticeBasis] = {lam: top}
    # (i, n, nu) -> list of functionals p_k . e_i^(n) restricted to T_nu
    e_images: dict[tuple[int, int, Weight], list[list]] = {}
    for nu in _below(datum, lam, T.weights)[1:]:
        gens = []
        for i in datum.nodes:
            for n in orders[i]:
                up = datum.shift(nu, i, n)
                if up not in rows:
                    continue
                blk = T.op("e", i, n).get(nu)
                if blk is None:
                    imgs = []
                else:
                    imgs = [vecmat(p, blk[1], F.zero) for p in rows[up].rows]
                e_images[(i, n, nu)] = imgs
                gens.extend(imgs)
        basis = dvr_lattice_basis(gens, pl, width=T.dims[nu])
        if len(basis):
            rows[nu] = basis
    ops: dict[tuple[str, int, int], dict[Weight, list]] = {}
    for i in datum.nodes:
        e_blocks, f_blocks = {}, {}
        for nu, basis in rows.items():
            up = datum.shift(nu, i, 1)
            if up in rows:
                imgs = e_images.get((i, 1, nu))
                if imgs is None:
                    imgs = []
                if imgs:
                    e_blocks[nu] = [basis.solve(g) for g in imgs]
                    if len(e_blocks[nu]) != len(rows[up]):
                        raise AssertionError("e-image count mismatch")
            down = datum.shift(nu, i, -1)
            if down in rows:
                blk = T.op("f", i, 1).get(nu)
                if blk is not None:
                    f_blocks[nu] = [basis.solve(vecmat(p, blk[1], F.zero)) for p in rows[down].rows]
        ops[("e", i, 1)] = e_blocks
        ops[("f", i, 1)] = f_blocks
    dims = {nu: len(b) for nu, b in rows.items()}
    nabla = WeightModule(datum, F, dims, ops, label=f"nabla{lam}")
    return nabla, rows


def _delta_route(lat: WeylLattice):
    datum, lam, pl = lat.datum, lat.lam, lat.place
    N = lat.nabla
    F = N.field
    orders = _gen_orders(datum, pl)
    bases: dict[Weight, LatticeBasis] = {lam: dvr_lattice_basis([[F.one]], pl)}
    for nu in N.weights:
        if nu == lam:
            continue
        gens = []
        for i in datum.nodes:
            for n in orders[i]:
                up = datum.shift(nu, i, n)
                if up not in bases:
                    continue
                blk = N.op("f", i, n).get(up)
                if blk is None:
                    continue
                for b in bases[up].rows:
                    gens.append(_matvec(blk[1], b, F.zero))
        basis = dvr_lattice_basis(gens, pl, width=N.dims[nu])
        if len(basis) != N.dims[nu]:
            raise ArithmeticError(f"Weyl lattice rank {len(basis)} at {nu}, expected {N.dims[nu]}")
        bases[nu] = basis
    ops = {}
    for i in datum.nodes:
        for kind, sign in (("e", 1), ("f", -1)):
            blocks = {}
            full = N.op(kind, i, 1)
            for nu, basis in bases.items():
                tgt = datum.shift(nu, i, sign)
                if tgt not in bases or nu not in full:
                    continue
                mat = full[nu][1]
                cols = [bases[tgt].solve(_matvec(mat, b, F.zero)) for b in basis.rows]
                blocks[nu] = [[c[r] for c in cols] for r in range(len(bases[tgt]))]
            ops[(kind, i, 1)] = blocks
    delta = WeightModule(datum, F, dict(N.dims), ops, label=f"delta{lam}")
    return delta, bases


def _matvec(mat, v, zero):
    out = []
    for row in mat:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def _residue_block(K, m, what: str):
    try:
        return [[K.from_generic(x) if x else K.zero for x in row] for row in m]
    except ValueError as exc:
        raise SpecializationError(f"{what}: {exc}") from exc


def _specialize_module(M: WeightModule, K, label: str) -> WeightModule:
    datum = M.datum
    ops = {}
    for i in datum.nodes:
        r = K.vanishing_order(datum.d[i])
        for n in ([1] if r is None else [1, r]):
            for kind in "ef":
                blocks = {}
                for src, (_, m) in M.op(kind, i, n).items():
                    res = _residue_block(K, m, f"{label} {kind}_{i + 1}^({n}) at {src}")
                    if any(x for row in res for x in row):
                        blocks[src] = res
                ops[(kind, i, n)] = blocks
    return WeightModule(datum, K, dict(M.dims), ops, label=label)


def specialize_weyl(lat: WeylLattice) -> SpecializedWeyl:
    """Base change of the lattices of ``lat`` to the residue field."""
    key = (lat.datum.key, lat.lam, lat.ell)
    got = _SPECIAL.get(key)
    if got is not None:
        return got
    out = SpecializedWeyl(lat)
    _SPECIAL[key] = out
    return out


def nabla_module(datum: RootDatum, lam, ell: int | None = None) -> WeightModule:
    """nabla_{K,zeta}(lam) (generic: V_F(lam) in the dual basis)."""
    return specialize_weyl(weyl_lattice(datum, lam, ell)).nabla


def delta_module(datum: RootDatum, lam, ell: int | None = None) -> WeightModule:
    """Delta_{K,zeta}(lam)."""
    return specialize_weyl(weyl_lattice(datum, lam, ell)).delta
