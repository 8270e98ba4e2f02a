"""Homological algebra: resolutions, Ext, recollement functors and derived checks."""
from .resolution import ext_dims, Resolution, Projectives, context, minimal_generators
from .recollement import (jstar, jlowerstar, jlowerstar_map, jshriek, adjunction_dims, injective_resolution,
                          r_jlowerstar_cohomology, ext_adjunction_sides, ext_adjunction_check)
from .derived import rs_dims, ExtGroup, ProductTable, compose, ext_yoneda_product, power_order


def projective_resolution(M, qmax):
    """Minimal projective resolution of M (over the dominant corner of its algebra) through degree qmax."""
    return context(M.algebra).resolution(M, qmax)
