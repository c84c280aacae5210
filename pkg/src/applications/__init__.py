from .jordan import (
    DEFAULT_JORDAN_TOL,
    EigenvalueBlocks,
    RankCertificate,
    JordanReport,
    skew_hamiltonian_characteristic,
    jordan_block_sizes_from_ranks,
    verify_rank_two,
    jordan_skew_hamiltonian,
)
from .cayley import CayleyCoefficients, cayley_skew_hamiltonian, cayley_transform_direct
from .svd3 import (
    SingularTriple,
    Svd3Report,
    svd3_analysis,
    svd3_eigenvalues,
    singular_values_3x3,
    classify_singular_values,
)

__all__ = [
    "DEFAULT_JORDAN_TOL",
    "EigenvalueBlocks",
    "RankCertificate",
    "JordanReport",
    "skew_hamiltonian_characteristic",
    "jordan_block_sizes_from_ranks",
    "verify_rank_two",
    "jordan_skew_hamiltonian",
    "CayleyCoefficients",
    "cayley_skew_hamiltonian",
    "cayley_transform_direct",
    "SingularTriple",
    "Svd3Report",
    "svd3_analysis",
    "svd3_eigenvalues",
    "singular_values_3x3",
    "classify_singular_values",
]
