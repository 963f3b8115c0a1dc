"""
Module homomorphisms by linear algebra.

:func:`module_hom` solves ``X g_M = g_N X`` for the generating operators
``g`` (``e_i, f_i`` and ``e_i^(r_i), f_i^(r_i)`` when ``r_i`` exists),
weight by weight, together with a normalization ``X v = w``.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from ..linalg import row_echelon
from ..rootdata import Weight
from .module import BlockMap, WeightModule

__all__ = ["generating_operators", "module_hom", "HomResult"]


def generating_operators(M: WeightModule) -> list[tuple[str, int, int]]:
    """Keys ``(kind, i, n)`` of a generating set of the divided-power algebra."""
    out = []
    for i in M.datum.nodes:
        r = M.vanishing_order(i)
        for n in ([1] if r is None else [1, r]):
            out += [("e", i, n), ("f", i, n)]
    return out


class HomResult:
    """A solution ``X`` and the dimension of the normalized solution space
    (``freedom == 0`` means the homomorphism is unique)."""

    def __init__(self, blocks: BlockMap | None, freedom: int):
        self.blocks = blocks
        self.freedom = freedom

    @property
    def exists(self) -> bool:
        return self.blocks is not None


def module_hom(M: WeightModule, N: WeightModule, v: Mapping[Weight, Sequence],
               w: Mapping[Weight, Sequence], gens: list[tuple[str, int, int]] | None = None,
               pairs: Sequence[tuple[BlockMap, BlockMap]] | None = None) -> HomResult:
    """Solve for a module map ``X: M -> N`` with ``X v = w``.

    Both modules must share datum and field.  The intertwined operators
    are the divided powers named by ``gens`` or, if ``pairs`` is given,
    explicit ``(operator on M, operator on N)`` pairs.  Returns a
    :class:`HomResult` whose ``blocks`` is ``None`` if no such map exists.

    EXAMPLES::

        >>> from qflag.rootdata import build_root_datum
        >>> from qflag.uqrep import nabla_module, specialize_weyl, weyl_lattice
        >>> S = specialize_weyl(weyl_lattice(build_root_datum("A1"), (3,), 3))
        >>> h = module_hom(S.delta, S.nabla, S.delta.unit_vector((3,)), S.nabla.unit_vector((3,)))
        >>> h.freedom, [h.blocks[(k,)][1] for k in (3, 1, -1, -3)]
        (0, [[[1]], [[0]], [[0]], [[1]]])
    """
    F = M.field
    if pairs is None:
        if gens is None:
            gens = sorted(set(generating_operators(M)) | set(generating_operators(N)))
        pairs = [(M.op(*key), N.op(*key)) for key in gens]
    common = [nu for nu in M.weights if nu in N.dims]
    # variable numbering: X_nu[r][c] for r < dim N_nu, c < dim M_nu
    index: dict[Weight, int] = {}
    nvar = 0
    for nu in common:
        index[nu] = nvar
        nvar += N.dims[nu] * M.dims[nu]
    rows: list[list] = []

    def var(nu, r, c):
        return index[nu] + r * M.dims[nu] + c

    for gm, gn in pairs:
        for nu in M.weights:
            bm = gm.get(nu)
            bn = gn.get(nu) if nu in N.dims else None
            if bm is None and bn is None:
                continue
            tgt = (bm or bn)[0]
            # X_tgt gM[nu] - gN[nu] X_nu = 0 as a map M_nu -> N_tgt
            if tgt not in N.dims:
                continue
            for r in range(N.dims[tgt]):
                for c in range(M.dims[nu]):
                    row: dict[int, object] = {}
                    if bm is not None and tgt in index:
                        mat = bm[1]
                        for k in range(M.dims[tgt]):
                            x = mat[k][c]
                            if x:
                                j = var(tgt, r, k)
                                row[j] = row.get(j, F.zero) + x
                    if bn is not None and nu in index:
                        mat = bn[1]
                        for k in range(N.dims[nu]):
                            x = mat[r][k]
                            if x:
                                j = var(nu, k, c)
                                row[j] = row.get(j, F.zero) - x
                    if any(row.values()):
                        dense = [F.zero] * (nvar + 1)
                        for j, x in row.items():
                            dense[j] = x
                        rows.append(dense)
    # normalization X v = w
    for nu, coords in v.items():
        out = w.get(nu, [F.zero] * N.dims.get(nu, 0))
        if nu not in index:
            if any(coords) and any(out):
                return HomResult(None, 0)
            continue
        for r in range(N.dims[nu]):
            dense = [F.zero] * (nvar + 1)
            for c, x in enumerate(coords):
                if x:
                    dense[var(nu, r, c)] = x
            dense[nvar] = out[r] if out[r] else F.zero
            rows.append(dense)
    red, pivots = row_echelon(rows) if rows else ([], [])
    if nvar in pivots:
        return HomResult(None, 0)
    sol = [F.zero] * nvar
    for row, p in zip(red, pivots):
        sol[p] = row[nvar]
    blocks: BlockMap = {}
    for nu in common:
        mat = [[sol[var(nu, r, c)] for c in range(M.dims[nu])] for r in range(N.dims[nu])]
        blocks[nu] = (nu, mat)
    return HomResult(blocks, nvar - len(pivots))
