from .cl22 import (
    Cl22Classification,
    cl22_generators,
    cl22_blades,
    cl22_reversion,
    cl22_clifford_conjugation,
    cl22_reversion_fixed_matrix,
    cl22_conjugation_fixed_matrix,
    cl22_fixed_by_reversion_minpoly,
    cl22_antifixed_by_reversion_minpoly,
    is_self_adjoint_one_k,
    is_self_adjoint_k_one,
    cl22_classify,
)
from .cl06 import (
    ANTISYMMETRIC_GRADES,
    CliffordMultivector06,
    cl06_generators,
    cl06_blades,
    cl06_build,
    cl06_decompose,
    cl06_quadratic_check,
)
from .octonion import (
    I13,
    Octonion,
    octonion_mul,
    omega,
    theta,
    octonion_minpoly,
    omega_product_annihilator,
    theta_product_annihilator,
)

__all__ = [
    "Cl22Classification",
    "cl22_generators",
    "cl22_blades",
    "cl22_reversion",
    "cl22_clifford_conjugation",
    "cl22_reversion_fixed_matrix",
    "cl22_conjugation_fixed_matrix",
    "cl22_fixed_by_reversion_minpoly",
    "cl22_antifixed_by_reversion_minpoly",
    "is_self_adjoint_one_k",
    "is_self_adjoint_k_one",
    "cl22_classify",
    "ANTISYMMETRIC_GRADES",
    "CliffordMultivector06",
    "cl06_generators",
    "cl06_blades",
    "cl06_build",
    "cl06_decompose",
    "cl06_quadratic_check",
    "I13",
    "Octonion",
    "octonion_mul",
    "omega",
    "theta",
    "octonion_minpoly",
    "omega_product_annihilator",
    "theta_product_annihilator",
]
