from .polynomial import (
    Polynomial,
    ShortlistKind,
    ScreenResult,
    format_polynomial,
    reverse_poly,
    screen_shortlist,
    poly_gcd,
    poly_lcm,
    minpoly_block_diagonal,
)
from .oracle import (
    DEFAULT_ORACLE_TOL,
    PowerSequence,
    power_sequence,
    gram_matrix,
    minimal_polynomial_oracle,
    characteristic_polynomial,
)
from .closed_form import (
    DEFAULT_BRANCH_TOL,
    BranchReport,
    minpoly_skew_symmetric,
    minpoly_hamiltonian,
    minpoly_perskewsymmetric,
    minpoly_skew_hamiltonian,
    minpoly_symmetric,
    minpoly_so4,
    closed_form,
    minimal_polynomial,
)

__all__ = [
    "Polynomial",
    "ShortlistKind",
    "ScreenResult",
    "format_polynomial",
    "reverse_poly",
    "screen_shortlist",
    "poly_gcd",
    "poly_lcm",
    "minpoly_block_diagonal",
    "DEFAULT_ORACLE_TOL",
    "PowerSequence",
    "power_sequence",
    "gram_matrix",
    "minimal_polynomial_oracle",
    "characteristic_polynomial",
    "DEFAULT_BRANCH_TOL",
    "BranchReport",
    "minpoly_skew_symmetric",
    "minpoly_hamiltonian",
    "minpoly_perskewsymmetric",
    "minpoly_skew_hamiltonian",
    "minpoly_symmetric",
    "minpoly_so4",
    "closed_form",
    "minimal_polynomial",
]
