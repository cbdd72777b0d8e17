"""Exact-arithmetic lattice polytope toolkit.

Mixed volumes, mixed degree, Cayley sums, lattice projections, and the
classification pipelines for triples of 3-dimensional lattice polytopes of
mixed degree one.
"""

from .polytope import (
    LatticePolytope,
    PolytopeTuple,
    cayley_sum,
    degree,
    dilate,
    hull,
    interior_lattice_points,
    is_hollow,
    lattice_points,
    lattice_pyramid,
    lattice_width,
    minkowski_sum,
    normalized_volume,
    standard_simplex,
    unit_cube,
)
from .equiv import (
    AffineUnimodularMap,
    NormalForm,
    affine_automorphisms,
    are_equivalent,
    normal_form,
    tuple_equivalent,
)
from .mixed import (
    MixedDegreeReport,
    is_mv_one,
    mixed_degree,
    mixed_volume,
    soprunov_check,
)
from .proj import (
    InfinitePrism,
    Projection,
    common_projection,
    full_dim_intersection_translate,
    prism_intersection,
    project_along,
    projections_onto_unimodular_simplex,
)
from .decomp import SummandPair, full_dim_summand_pairs, minkowski_difference

__all__ = [
    "AffineUnimodularMap",
    "InfinitePrism",
    "LatticePolytope",
    "MixedDegreeReport",
    "NormalForm",
    "PolytopeTuple",
    "Projection",
    "SummandPair",
    "affine_automorphisms",
    "are_equivalent",
    "cayley_sum",
    "common_projection",
    "degree",
    "dilate",
    "full_dim_intersection_translate",
    "full_dim_summand_pairs",
    "hull",
    "interior_lattice_points",
    "is_hollow",
    "is_mv_one",
    "lattice_points",
    "lattice_pyramid",
    "lattice_width",
    "minkowski_difference",
    "minkowski_sum",
    "mixed_degree",
    "mixed_volume",
    "normal_form",
    "normalized_volume",
    "prism_intersection",
    "project_along",
    "projections_onto_unimodular_simplex",
    "soprunov_check",
    "standard_simplex",
    "tuple_equivalent",
    "unit_cube",
]

__version__ = "1.0.0"
