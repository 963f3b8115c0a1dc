"""
Named verification suites over module families.

Each ``check_*`` function runs one family of identities for one root
datum and one coefficient mode (``ell=None`` is generic q) and returns a
:class:`~qflag.report.CheckResult`.  The command line and the acceptance
tests are thin layers over these.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .braid import (verify_braid_relations, verify_reduced_word_independence, verify_sign_identity,
                    verify_tensor_braid, verify_weight_mapping)
from .flagcover import (dominant_weights, scan_sharp_surjectivity, verify_associativity,
                        verify_classical_bridge, verify_covering, verify_mult_map,
                        verify_sigma_multiplicativity, verify_w_mult_commutation, mult_map)
from .frobenius import verify_extremal_iso, verify_pullback, verify_pullback_tensor
from .qarith import verify_arithmetic
from .report import CheckResult
from .rootdata import RootDatum, build_root_datum, sharp_datum
from .uqrep import TensorModule, WeightModule, delta_module, nabla_module, verify_pm1, verify_relations

__all__ = [
    "SUPPORTED_TYPES", "parse_mode", "mode_label", "relation_family", "bounded_weights",
    "graded_triples", "datum_for", "check_arithmetic", "check_relations", "check_braid", "check_pm1",
    "check_frobenius", "check_graded", "check_covering", "check_sharp", "check_dimension",
]

SUPPORTED_TYPES = ("A1", "A1xA1", "A2", "B2")


def parse_mode(text: str | int | None) -> int | None:
    """``"generic"`` or ``None`` -> ``None``; otherwise a positive order."""
    if text is None or text == "generic":
        return None
    ell = int(text)
    if ell < 1:
        raise ValueError(f"the order of zeta must be positive, got {ell}")
    return ell


def mode_label(ell: int | None) -> str:
    return "generic" if ell is None else f"ell={ell}"


def relation_family(datum: RootDatum, ell: int | None) -> list[WeightModule]:
    """The fundamental dual Weyl modules and one tensor product of two of them."""
    mods = [nabla_module(datum, datum.fundamental_weight(i), ell) for i in datum.nodes]
    mods.append(TensorModule(mods[0], mods[-1]))
    return mods


def bounded_weights(datum: RootDatum, bound: int, nonzero: bool = True) -> list[tuple[int, ...]]:
    """Dominant weights with every coordinate at most ``bound``."""
    return [w for w in dominant_weights(datum.rank, bound) if any(w) or not nonzero]


def graded_triples(datum: RootDatum, height: int) -> list[tuple[tuple[int, ...], ...]]:
    """Triples of dominant weights of total height (coordinate sum) at most ``height``."""
    ws = [w for w in dominant_weights(datum.rank, height) if sum(w) <= height]
    return [t for t in itertools.product(ws, ws, ws) if sum(map(sum, t)) <= height]


def check_arithmetic(seed: int = 0, matrices: int = 200) -> CheckResult:
    return verify_arithmetic(seed=seed, matrices=matrices)


def check_relations(datum: RootDatum, ell: int | None) -> CheckResult:
    res = CheckResult(f"relations[{datum.type_label} {mode_label(ell)}]")
    for M in relation_family(datum, ell):
        res.merge(verify_relations(M))
    return res


def check_braid(datum: RootDatum, ell: int | None, bound: int = 3, J: Iterable[int] | None = None,
                lams: Sequence[Sequence[int]] | None = None) -> CheckResult:
    """Braid relations, reduced-word independence, weight mapping and the
    tensor rules on the relation family; at ``ell`` in ``{1, 2}`` also the
    sign identity on ``Delta(lam)`` for every ``lam`` with coordinates at most
    ``bound`` (or the given ``lams``)."""
    res = CheckResult(f"braid[{datum.type_label} {mode_label(ell)}]")
    fam = relation_family(datum, ell)
    for M in fam:
        res.merge(verify_braid_relations(M))
        res.merge(verify_reduced_word_independence(M))
        res.merge(verify_weight_mapping(M))
    A, B = fam[0], fam[len(datum.nodes) - 1]
    for hyp in ("first-e-null", "second-e-null", "first-f-null"):
        if hyp == "first-e-null" and ell not in (1, 2):
            continue
        res.merge(verify_tensor_braid(A, B, hyp))
    if ell in (1, 2):
        for lam in (lams if lams is not None else bounded_weights(datum, bound)):
            D = delta_module(datum, tuple(lam), ell)
            res.merge(verify_braid_relations(D))
            res.merge(verify_braid_relations(D, True, J))
            res.merge(verify_reduced_word_independence(D))
            res.merge(verify_weight_mapping(D))
            res.merge(verify_sign_identity(D, J))
    return res


def check_pm1(datum: RootDatum, ell: int, J: Iterable[int] | None = None, max_n: int = 3) -> CheckResult:
    """The hyperalgebra identities for ``J`` (default: the bipartition and
    its complement) on the relation family."""
    if ell not in (1, 2):
        raise ValueError("the pm1 suite needs ell in {1, 2}")
    res = CheckResult(f"pm1[{datum.type_label} {mode_label(ell)}]")
    default = datum.bipartition_J()
    Js = [frozenset(J)] if J is not None else [default, frozenset(datum.nodes) - default]
    res.data["J"] = [sorted(j + 1 for j in s) for s in Js]
    for Jset in Js:
        for M in relation_family(datum, ell):
            res.merge(verify_pm1(M, Jset, max_n))
    return res


def check_frobenius(datum: RootDatum, lam: Sequence[int], ell: int) -> CheckResult:
    """Extremal isomorphisms for ``lam`` plus pullback relation checks on the
    rescaled ``nabla``, ``Delta`` and a tensor pair."""
    lam = tuple(lam)
    sd = sharp_datum(datum, ell)
    res = CheckResult(f"frobenius[{datum.type_label} {lam} {mode_label(ell)}]")
    ext = verify_extremal_iso(datum, lam, ell)
    res.merge(ext)
    res.data["extremal_dims"] = ext.data.get("extremal_dims")
    lam_s = sd.to_sharp(lam)
    for M in (nabla_module(sd.datum, lam_s, ell), delta_module(sd.datum, lam_s, ell)):
        res.merge(verify_pullback(M, sd))
    fund = [nabla_module(sd.datum, sd.datum.fundamental_weight(i), ell) for i in sd.datum.nodes]
    res.merge(verify_pullback_tensor(fund[0], fund[-1], sd))
    return res


def check_graded(datum: RootDatum, ell: int | None, height: int = 6, full: bool = True) -> CheckResult:
    """Associativity on every triple of total height at most ``height``;
    sigma-multiplicativity and w-mult commutation on every pair in the same
    range.  With ``full`` also the module-map property of ``Xi``, the
    comparison of associativity with the triple coproduct and, at ``ell``
    in ``{1, 2}``, the classical comparison."""
    res = CheckResult(f"graded[{datum.type_label} {mode_label(ell)} height<={height}]")
    triples = graded_triples(datum, height)
    pairs = sorted({(a, b) for a, b, _ in triples})
    for a, b in pairs:
        if full:
            res.merge(verify_mult_map(mult_map(datum, a, b, ell)))
        res.merge(verify_sigma_multiplicativity(datum, a, b, ell))
        res.merge(verify_w_mult_commutation(datum, a, b, ell))
        if full and ell in (1, 2):
            res.merge(verify_classical_bridge(datum, a, b, ell))
    for a, b, c in triples:
        res.merge(verify_associativity(datum, a, b, c, ell, direct=full))
    res.data.update({"triples": len(triples), "pairs": len(pairs)})
    return res


def check_covering(datum: RootDatum, ell: int | None, mu: Sequence[int], bound: int,
                   expect_covered: Iterable[Sequence[int]] = ()) -> CheckResult:
    """:func:`~qflag.flagcover.verify_covering`, plus any pinned ``lam`` that
    must be covered."""
    res = verify_covering(datum, mu, ell, bound)
    covered = {tuple(r["lambda"]): r["covered"] for r in res.data["runs"]}
    for lam in expect_covered:
        res.record(covered.get(tuple(lam), False), lam=list(lam), reason="pinned as covered")
    return res


def check_sharp(datum: RootDatum, ell: int, mu: Sequence[int], bound: int) -> CheckResult:
    return scan_sharp_surjectivity(datum, mu, ell, bound)


def check_dimension(datum: RootDatum, ell: int | None, lams: Iterable[Sequence[int]]) -> CheckResult:
    """``dim Delta(lam)`` and ``dim nabla(lam)`` against the Weyl dimension."""
    res = CheckResult(f"dimension[{datum.type_label} {mode_label(ell)}]")
    for lam in lams:
        lam = tuple(lam)
        want = datum.weyl_dimension(lam)
        got_d = delta_module(datum, lam, ell).dim
        got_n = nabla_module(datum, lam, ell).dim
        res.record(got_d == want == got_n, lam=list(lam), delta=got_d, nabla=got_n, weyl=want)
    return res


def datum_for(type_label: str) -> RootDatum:
    if type_label not in SUPPORTED_TYPES:
        raise ValueError(f"unsupported type {type_label!r}; choose from {', '.join(SUPPORTED_TYPES)}")
    return build_root_datum(type_label)
