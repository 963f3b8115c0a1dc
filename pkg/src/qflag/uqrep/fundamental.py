"""
Generic-q models of fundamental modules and highest weight submodules.
"""
from __future__ import annotations

from ..linalg import nullspace
from ..qarith import dvr_lattice_basis, field_for
from ..rootdata import RootDatum, Weight
from .module import WeightModule, TensorModule

__all__ = ["fundamental_module", "highest_weight_submodule", "trivial_module",
           "weyl_orbit", "is_minuscule"]


def weyl_orbit(datum: RootDatum, lam: Weight) -> set[Weight]:
    seen = {tuple(lam)}
    stack = [tuple(lam)]
    while stack:
        w = stack.pop()
        for i in datum.nodes:
            v = datum.reflect(i, w)
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def is_minuscule(datum: RootDatum, i: int) -> bool:
    lam = datum.fundamental_weight(i)
    return len(weyl_orbit(datum, lam)) == datum.weyl_dimension(lam)


def trivial_module(datum: RootDatum, field=None) -> WeightModule:
    field = field or field_for(None)
    ops = {(k, i, 1): {} for k in "ef" for i in datum.nodes}
    return WeightModule(datum, field, {datum.zero(): 1}, ops, label="0")


def _minuscule(datum: RootDatum, i: int) -> WeightModule:
    field = field_for(None)
    orbit = weyl_orbit(datum, datum.fundamental_weight(i))
    ops = {}
    for j in datum.nodes:
        ops[("e", j, 1)] = {mu: [[field.one]] for mu in orbit if datum.shift(mu, j, 1) in orbit}
        ops[("f", j, 1)] = {mu: [[field.one]] for mu in orbit if datum.shift(mu, j, -1) in orbit}
    return WeightModule(datum, field, {mu: 1 for mu in orbit}, ops, label=f"V(w{i + 1})")


def fundamental_module(datum: RootDatum, i: int) -> WeightModule:
    """The generic-q irreducible module with highest weight varpi_i.

    Minuscule modules use the orbit basis with all matrix coefficients 1.
    Otherwise the module is cut out of the square of a minuscule one.

    EXAMPLES::

        >>> from qflag.rootdata import build_root_datum
        >>> fundamental_module(build_root_datum("B2"), 1).dim
        5
    """
    cache = datum._cache.setdefault("fundamental", {})
    if i in cache:
        return cache[i]
    if is_minuscule(datum, i):
        mod = _minuscule(datum, i)
    else:
        lam = datum.fundamental_weight(i)
        mod = None
        for m in datum.nodes:
            if not is_minuscule(datum, m):
                continue
            vm = _minuscule(datum, m)
            sq = TensorModule(vm, vm)
            if lam in sq.dims:
                try:
                    mod = highest_weight_submodule(sq, lam)
                except ValueError:
                    continue
                mod.label = f"V(w{i + 1})"
                break
        if mod is None:
            raise NotImplementedError(f"no model for fundamental module {i} of {datum.type_label}")
    cache[i] = mod
    return mod


def highest_weight_submodule(M: WeightModule, lam: Weight) -> WeightModule:
    """The submodule generated by a highest weight vector of weight ``lam``.

    Over Q(q) this is the irreducible module V(lam).  Its basis in each
    weight space is an echelon basis of the span of the ``f_i`` images,
    and the operators are rewritten in that basis.

    Raises ``ValueError`` if no nonzero vector of weight ``lam`` is killed
    by every ``e_i``.
    """
    datum = M.datum
    lam = tuple(lam)
    if lam not in M.dims:
        raise ValueError(f"{lam} is not a weight of {M.label}")
    stack = []
    for i in datum.nodes:
        blk = M.op("e", i, 1).get(lam)
        if blk is not None:
            stack.extend(blk[1])
    if stack:
        kernel = nullspace(stack, M.field.one, M.field.zero)
    else:
        kernel = [[M.field.one if k == j else M.field.zero for k in range(M.dims[lam])]
                  for j in range(M.dims[lam])]
    if not kernel:
        raise ValueError(f"no highest weight vector of weight {lam} in {M.label}")
    top = kernel[0]
    bases = {lam: dvr_lattice_basis([top], None)}
    order = sorted((w for w in M.weights if datum.in_root_cone(datum.add(lam, w, -1))),
                   key=lambda w: datum.height(datum.add(lam, w, -1)))
    for nu in order[1:]:
        gens = []
        for i in datum.nodes:
            up = datum.shift(nu, i, 1)
            if up not in bases:
                continue
            blk = M.op("f", i, 1).get(up)
            if blk is None:
                continue
            mat = blk[1]
            for b in bases[up].rows:
                gens.append([sum((x * y for x, y in zip(row, b) if x and y), M.field.zero) for row in mat])
        basis = dvr_lattice_basis(gens, None, width=M.dims[nu])
        if len(basis):
            bases[nu] = basis
    return _restrict(M, bases, f"V{lam}")


def _restrict(M: WeightModule, bases, label: str) -> WeightModule:
    """Rewrite e_i, f_i of ``M`` in the column bases ``bases`` of a submodule."""
    datum = M.datum
    F = M.field
    ops = {}
    for i in datum.nodes:
        for kind, sign in (("e", 1), ("f", -1)):
            blocks = {}
            full = M.op(kind, i, 1)
            for nu, basis in bases.items():
                tgt = datum.shift(nu, i, sign)
                if tgt not in bases or nu not in full:
                    continue
                mat = full[nu][1]
                cols = []
                for b in basis.rows:
                    img = [sum((x * y for x, y in zip(row, b) if x and y), F.zero) for row in mat]
                    cols.append(bases[tgt].solve(img))
                blocks[nu] = [[cols[c][r] for c in range(len(cols))] for r in range(len(bases[tgt]))]
            ops[(kind, i, 1)] = blocks
    return WeightModule(datum, F, {nu: len(b) for nu, b in bases.items()}, ops, label=label)
