"""Family membership tests and parameter extraction."""

import logging
from typing import Optional, Set, Tuple

import numpy as np

from ..algebra.quaternion import PureQuaternion, Quaternion
from ..algebra.tensor import flip_form, matrix_to_tensor, symplectic_form, tensor_to_matrix
from ..errors import ConsistencyViolation, NotInFamily, RankDeficientFactorization
from .params import (
    FamilyParams,
    FamilyTag,
    HamiltonianParams,
    PerskewParams,
    SkewHamiltonianParams,
    SkewSymmetricParams,
    SpecialOrthogonalParams,
    SymmetricParams,
)

logger = logging.getLogger(__name__)

DEFAULT_MEMBERSHIP_TOL = 1e-9
FACTOR_TOL = 1e-9
RECONSTRUCTION_TOL = 1e-10
RECONSTRUCTION_SLACK = 20.0


def _as_mat4(matrix) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {matrix.shape}")
    return matrix


def defining_residual(matrix: np.ndarray, tag: FamilyTag) -> float:
    """
    Largest entry of the defining relation's residual.

    Args:
        matrix: 4x4 input
        tag: Family whose relation is evaluated

    Returns:
        max |entry| of X^T + X, X^T - X, X^T J + J X, X^T J - J X,
        X^T R + R X or X^T X - I
    """
    matrix = _as_mat4(matrix)
    transpose = matrix.T
    if tag is FamilyTag.SKEW_SYMMETRIC:
        residual = transpose + matrix
    elif tag is FamilyTag.SYMMETRIC:
        residual = transpose - matrix
    elif tag is FamilyTag.HAMILTONIAN:
        j4 = symplectic_form()
        residual = transpose @ j4 + j4 @ matrix
    elif tag is FamilyTag.SKEW_HAMILTONIAN:
        j4 = symplectic_form()
        residual = transpose @ j4 - j4 @ matrix
    elif tag is FamilyTag.PERSKEW:
        r4 = flip_form()
        residual = transpose @ r4 + r4 @ matrix
    elif tag is FamilyTag.SO4:
        residual = transpose @ matrix - np.eye(4)
    else:
        raise ValueError(f"Unknown family: {tag}")
    return float(np.max(np.abs(residual)))


def is_member(matrix: np.ndarray, tag: FamilyTag, tol: float = DEFAULT_MEMBERSHIP_TOL) -> bool:
    """Apply the membership rule for a single family."""
    matrix = _as_mat4(matrix)
    scale = 1.0 + np.linalg.norm(matrix)
    if defining_residual(matrix, tag) > tol * scale:
        return False
    if tag is FamilyTag.SO4:
        return abs(float(np.linalg.det(matrix)) - 1.0) <= tol * scale
    return True


def detect_families(matrix: np.ndarray, tol: float = DEFAULT_MEMBERSHIP_TOL) -> Set[FamilyTag]:
    """
    Decide which structured families a 4x4 matrix belongs to.

    Args:
        matrix: 4x4 real matrix
        tol: Relative tolerance, scaled by (1 + |M|_F)

    Returns:
        Set of matching tags (possibly empty)
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    matrix = _as_mat4(matrix)
    tags = {tag for tag in FamilyTag if is_member(matrix, tag, tol)}
    logger.debug(
        f"Detected families: {[tag.value for tag in FamilyTag.ordered(tags)] or 'none'}"
    )
    return tags


def so4_factor(matrix: np.ndarray, tol: float = FACTOR_TOL) -> Tuple[Quaternion, Quaternion]:
    """
    Factor a rotation of R^4 as x -> u x conj(v).

    The projected coefficient array of u (x) v is the outer product of the
    components of u and v, so u is read from the column and v from the row
    through its largest entry.

    Args:
        matrix: 4x4 special orthogonal matrix
        tol: Rank-one tolerance on the coefficient array

    Returns:
        (u, v) unit quaternions, with the first nonzero component of u positive

    Raises:
        RankDeficientFactorization: If the coefficient array is not rank one
    """
    matrix = _as_mat4(matrix)
    coeffs = matrix_to_tensor(matrix).coeffs
    row, column = np.unravel_index(int(np.argmax(np.abs(coeffs))), coeffs.shape)
    pivot = coeffs[row, column]
    if pivot == 0.0:
        raise RankDeficientFactorization("coefficient array is zero")

    u = coeffs[:, column] / np.linalg.norm(coeffs[:, column])
    v = coeffs[row, :] / np.linalg.norm(coeffs[row, :])
    if u[row] * v[column] * pivot < 0:
        v = -v

    # Joint sign: first nonzero component of u is positive.
    nonzero = np.flatnonzero(np.abs(u) > tol)
    if nonzero.size and u[nonzero[0]] < 0:
        u, v = -u, -v

    error = float(np.linalg.norm(coeffs - np.outer(u, v)))
    if error > tol * (1.0 + np.linalg.norm(coeffs)) * 10.0:
        raise RankDeficientFactorization(
            f"coefficient array is not rank one (residual {error:.3e})"
        )
    logger.debug(f"SO(4) factorization residual: {error:.3e}")
    return Quaternion.from_array(u), Quaternion.from_array(v)


def skew_hamiltonian_entrywise(matrix: np.ndarray) -> SkewHamiltonianParams:
    """Read (b, p, c, d) straight from the entries of a skew-Hamiltonian matrix."""
    m = _as_mat4(matrix)
    b = 0.5 * (m[0, 0] + m[1, 1])
    p = PureQuaternion(
        0.5 * (m[2, 1] - m[0, 3]),
        0.5 * (m[0, 0] - m[1, 1]),
        0.5 * (m[0, 1] + m[1, 0]),
    )
    c = 0.5 * (m[0, 1] - m[1, 0])
    d = 0.5 * (m[0, 3] + m[2, 1])
    return SkewHamiltonianParams(b, p, c, d)


def _project(matrix: np.ndarray, tag: FamilyTag) -> FamilyParams:
    c = matrix_to_tensor(matrix).coeffs
    if tag is FamilyTag.SKEW_SYMMETRIC:
        return SkewSymmetricParams(
            PureQuaternion.from_array(c[1:, 0]), PureQuaternion.from_array(c[0, 1:])
        )
    if tag is FamilyTag.HAMILTONIAN:
        return HamiltonianParams(
            c[0, 2],
            PureQuaternion.from_array(c[1:, 0]),
            PureQuaternion.from_array(c[1:, 1]),
            PureQuaternion.from_array(c[1:, 3]),
        )
    if tag is FamilyTag.PERSKEW:
        return PerskewParams(
            r=PureQuaternion(c[1, 1], 0.0, c[3, 1]),
            s=PureQuaternion(0.0, c[2, 2], c[2, 3]),
            alpha=c[0, 1],
            beta=c[2, 0],
        )
    if tag is FamilyTag.SYMMETRIC:
        return SymmetricParams(
            c[0, 0],
            PureQuaternion.from_array(c[1:, 1]),
            PureQuaternion.from_array(c[1:, 2]),
            PureQuaternion.from_array(c[1:, 3]),
        )
    if tag is FamilyTag.SKEW_HAMILTONIAN:
        return SkewHamiltonianParams(
            c[0, 0], PureQuaternion.from_array(c[1:, 2]), c[0, 1], c[0, 3]
        )
    raise ValueError(f"Unknown family: {tag}")


def extract_params(
    matrix: np.ndarray, tag: FamilyTag, tol: Optional[float] = None
) -> FamilyParams:
    """
    Extract the representation parameters of a matrix in the given family.

    Args:
        matrix: 4x4 matrix
        tag: Family the matrix is claimed to belong to
        tol: Membership tolerance (defaults to DEFAULT_MEMBERSHIP_TOL)

    Returns:
        Family-specific parameter dataclass

    Raises:
        NotInFamily: If the matrix fails the family's defining relation
        RankDeficientFactorization: If an SO(4) coefficient array is not rank one
        ConsistencyViolation: If the parameters do not reconstruct the matrix
    """
    tol = DEFAULT_MEMBERSHIP_TOL if tol is None else tol
    matrix = _as_mat4(matrix)
    if not is_member(matrix, tag, tol):
        raise NotInFamily(
            f"matrix is not {tag.display_name} "
            f"(residual {defining_residual(matrix, tag):.3e})"
        )

    if tag is FamilyTag.SO4:
        u, v = so4_factor(matrix)
        params: FamilyParams = SpecialOrthogonalParams(u, v)
    else:
        params = _project(matrix, tag)

    # Exact members reconstruct to RECONSTRUCTION_TOL; near-members accepted
    # by a looser tol may differ by their distance from the family.
    scale = 1.0 + float(np.linalg.norm(matrix))
    limit = scale * (RECONSTRUCTION_TOL + RECONSTRUCTION_SLACK * defining_residual(matrix, tag))
    error = float(np.linalg.norm(matrix - params.matrix()))
    logger.debug(f"{tag.display_name} reconstruction error: {error:.3e} (limit {limit:.3e})")
    if error > limit:
        raise ConsistencyViolation(
            f"{tag.display_name} parameters reconstruct the matrix with error "
            f"{error:.3e} > {limit:.3e}"
        )
    return params


def build_matrix(params: FamilyParams) -> np.ndarray:
    """Reconstruct the 4x4 matrix represented by a parameter set."""
    return tensor_to_matrix(params.tensor())
