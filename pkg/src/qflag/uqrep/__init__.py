"""Integrable modules over the quantized enveloping algebra, realized as
weight modules with divided-power operators."""
from .fundamental import fundamental_module, highest_weight_submodule, trivial_module
from .generators import Generator, act, binomial, check_J, generator_map, parse_generator, verify_pm1
from .homs import HomResult, generating_operators, module_hom
from .lattice import (SpecializationError, SpecializedWeyl, WeylLattice, clear_caches,
                      delta_module, nabla_module, specialize_weyl, weyl_lattice)
from .module import TensorModule, WeightModule, block_apply, compose, dump_module
from .relations import maps_equal, verify_relations

__all__ = [
    "WeightModule", "TensorModule", "block_apply", "compose", "dump_module", "fundamental_module",
    "highest_weight_submodule", "trivial_module", "WeylLattice", "SpecializedWeyl",
    "weyl_lattice", "specialize_weyl", "nabla_module", "delta_module", "clear_caches",
    "SpecializationError", "verify_relations", "maps_equal", "Generator", "parse_generator",
    "generator_map", "act", "binomial", "check_J", "verify_pm1", "module_hom", "HomResult",
    "generating_operators",
]
