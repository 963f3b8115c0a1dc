"""Exact scalar arithmetic: Laurent polynomials, Q(q), Q(zeta_l), the DVR at a
cyclotomic place, and q-combinatorics."""
from .checks import verify_arithmetic
from .cyclo import CycloNum, cyclotomic_poly
from .dvr import (DvrScalar, LatticeBasis, Place, dvr_lattice_basis, place,
                  residue, valuation)
from .fields import CyclotomicField, Field, GenericField, field_for
from .laurent import LaurentPoly
from .qcomb import q_binomial, q_binomial_any, q_factorial, q_integer
from .ratfunc import RatFunc

__all__ = [
    "LaurentPoly", "RatFunc", "CycloNum", "DvrScalar", "LatticeBasis", "Place",
    "place", "valuation", "residue", "dvr_lattice_basis", "cyclotomic_poly",
    "q_integer", "q_factorial", "q_binomial", "q_binomial_any", "Field", "GenericField",
    "CyclotomicField", "field_for", "verify_arithmetic",
]
