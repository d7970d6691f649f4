"""Exact orbifold quantum cohomology of weighted projective spaces and the
matching Landau-Ginzburg data, with mirror checkers and genus-0 potential
reconstruction.  All arithmetic is exact rational arithmetic.
"""

from .combinatorics import (
    SValueSequence,
    Sector,
    Weights,
    age,
    fixed_indices,
    inverse_sector,
    is_sector,
    k_min,
    s_sequence,
    sector_dim,
    sectors,
    spectrum,
)
from .acohomology import (
    BasisClass,
    CohClass,
    a_infinity_matrix,
    chern_total,
    cup,
    cup_basis,
    degree,
    gram_matrix,
    integral_top,
    obstruction_set,
    ordered_basis,
    pairing,
    unit,
)
from .errors import InternalConsistencyError
from .mirror import CheckReport, MirrorIndexMap, check_classical, check_quantum, mirror_index_map
from .selftest import run_selftest
from .wdvv import Potential, homogeneity_step, initial_coeffs, reconstruct, wdvv_residual

__version__ = "0.1.0"

__all__ = [
    "BasisClass",
    "CheckReport",
    "CohClass",
    "InternalConsistencyError",
    "MirrorIndexMap",
    "Potential",
    "SValueSequence",
    "Sector",
    "Weights",
    "a_infinity_matrix",
    "age",
    "check_classical",
    "check_quantum",
    "chern_total",
    "cup",
    "cup_basis",
    "degree",
    "fixed_indices",
    "gram_matrix",
    "homogeneity_step",
    "initial_coeffs",
    "integral_top",
    "inverse_sector",
    "is_sector",
    "k_min",
    "mirror_index_map",
    "obstruction_set",
    "ordered_basis",
    "pairing",
    "reconstruct",
    "run_selftest",
    "s_sequence",
    "sector_dim",
    "sectors",
    "spectrum",
    "unit",
    "wdvv_residual",
]
