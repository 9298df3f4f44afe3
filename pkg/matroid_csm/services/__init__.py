"""
Service layer for matroid and tropical computations.
"""
from matroid_csm.services.bergman import (
    bergman_skeleton,
    coarse_support_check,
    csm_cycle,
    csm_weight,
    matroid_cycle,
    pairing,
    skeleton_cycle,
)
from matroid_csm.services.catalog import catalog, matroid_from_name, octahedron_subdivisions
from matroid_csm.services.flat_lattice import (
    FlatLattice,
    beta,
    characteristic_polynomial,
    lattice_of_flats,
    mobius,
    reduced_characteristic_polynomial,
)
from matroid_csm.services.invariants import (
    check_hvector,
    csm_degree_polynomial,
    euler_char_complement,
    g_polynomial,
    g_polynomial_rank3,
    g_polynomial_uniform,
    n_cycles_uniform,
)
from matroid_csm.services.matroid import Matroid
from matroid_csm.services.polynomial import IntPolynomial
from matroid_csm.services.polytope import (
    MatroidPolytope,
    Subdivision,
    all_faces,
    check_beta_valuation,
    check_csm_valuation,
    face_in_direction,
    interior_faces,
    validate_subdivision,
)
from matroid_csm.services.tropical import (
    TropicalCycle,
    degree,
    degree_by_recursion,
    is_balanced,
    pushforward_forget,
    stable_intersect,
    standard_hyperplane,
)

__all__ = [
    "FlatLattice",
    "IntPolynomial",
    "Matroid",
    "MatroidPolytope",
    "Subdivision",
    "TropicalCycle",
    "all_faces",
    "bergman_skeleton",
    "beta",
    "catalog",
    "characteristic_polynomial",
    "check_beta_valuation",
    "check_csm_valuation",
    "check_hvector",
    "coarse_support_check",
    "csm_cycle",
    "csm_degree_polynomial",
    "csm_weight",
    "degree",
    "degree_by_recursion",
    "euler_char_complement",
    "face_in_direction",
    "g_polynomial",
    "g_polynomial_rank3",
    "g_polynomial_uniform",
    "interior_faces",
    "is_balanced",
    "lattice_of_flats",
    "matroid_cycle",
    "matroid_from_name",
    "mobius",
    "n_cycles_uniform",
    "octahedron_subdivisions",
    "pairing",
    "pushforward_forget",
    "reduced_characteristic_polynomial",
    "skeleton_cycle",
    "stable_intersect",
    "standard_hyperplane",
    "validate_subdivision",
]
