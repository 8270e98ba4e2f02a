"""Modules over Schur algebras: constructions, maps, Hom spaces and complexes."""
from .core import (AModule, ModuleMap, Complex, weight_character, submodule, quotient, kernel, image,
                   cokernel, direct_sum, dual, restrict, restrict_to_corner, hom_space, hom_dim, iso_test,
                   find_iso, find_split_injection, identity_map, zero_map, generated_submodule,
                   hom_complex_dims, corestrict)
from .functors import (tensor_power_module, slot_quotient, omega_module, de_rham, koszul, forms,
                       hook_costandard, hook_simple, hook_standard, hook_module, simple_dim_sym,
                       general_costandard, general_standard, simple_general, simple_modules,
                       regular_module, dual_regular, projective_module, kuhn_dual)
from .complexes import build_K, build_M, build_Mprime, build_R, build_L, complex_cohomology, check_complex
