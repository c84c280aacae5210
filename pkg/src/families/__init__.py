from .params import (
    FamilyTag,
    FamilyParams,
    SkewSymmetricParams,
    HamiltonianParams,
    PerskewParams,
    SymmetricParams,
    SkewHamiltonianParams,
    SpecialOrthogonalParams,
)
from .detect import (
    DEFAULT_MEMBERSHIP_TOL,
    defining_residual,
    is_member,
    detect_families,
    extract_params,
    so4_factor,
    skew_hamiltonian_entrywise,
    build_matrix,
)

__all__ = [
    "FamilyTag",
    "FamilyParams",
    "SkewSymmetricParams",
    "HamiltonianParams",
    "PerskewParams",
    "SymmetricParams",
    "SkewHamiltonianParams",
    "SpecialOrthogonalParams",
    "DEFAULT_MEMBERSHIP_TOL",
    "defining_residual",
    "is_member",
    "detect_families",
    "extract_params",
    "so4_factor",
    "skew_hamiltonian_entrywise",
    "build_matrix",
]
