"""
Generic minimal polynomial via Gram matrices of matrix powers.

The powers I, X, X^2, ... are compared under <Y, Z> = trace(Y^T Z); the first
index whose Gram matrix loses rank is the degree of the minimal polynomial and
the kernel vector holds its coefficients.
"""

import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np
from scipy import linalg

from ..errors import RankDecisionAmbiguous
from .polynomial import Polynomial

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_TOL = 1e-11
MAX_DIMENSION = 16
AMBIGUITY_FACTOR = 10.0


@dataclass
class PowerSequence:
    """
    Frobenius-normalized powers of a square matrix.

    Attributes:
        normalized: normalized[k] = X^k / scales[k]
        scales: scales[k] = |X^k|_F (0 once a power vanishes)
    """

    normalized: List[np.ndarray] = field(default_factory=list)
    scales: List[float] = field(default_factory=list)

    def power(self, k: int) -> np.ndarray:
        return self.scales[k] * self.normalized[k]


def _as_square(matrix) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")
    return matrix


def power_sequence(matrix: np.ndarray, k: int) -> PowerSequence:
    """
    Compute X^0 .. X^k with running Frobenius scaling.

    Args:
        matrix: Square matrix X
        k: Highest power

    Returns:
        PowerSequence of length k + 1
    """
    matrix = _as_square(matrix)
    identity = np.eye(matrix.shape[0])
    sequence = PowerSequence()
    current = identity / np.linalg.norm(identity)
    scale = float(np.linalg.norm(identity))
    sequence.normalized.append(current)
    sequence.scales.append(scale)
    for _ in range(k):
        step = matrix @ current
        step_norm = float(np.linalg.norm(step))
        if step_norm == 0.0:
            current = np.zeros_like(matrix)
            scale = 0.0
        else:
            current = step / step_norm
            scale *= step_norm
        sequence.normalized.append(current)
        sequence.scales.append(scale)
    return sequence


def gram_matrix(matrix: np.ndarray, degree: int) -> np.ndarray:
    """
    Gram matrix of {I, X, ..., X^degree} under trace(Y^T Z).

    Args:
        matrix: Square matrix X
        degree: Highest power i

    Returns:
        (i+1) x (i+1) symmetric positive semidefinite matrix
    """
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    matrix = _as_square(matrix)
    powers = [np.eye(matrix.shape[0])]
    for _ in range(degree):
        powers.append(powers[-1] @ matrix)
    stacked = np.array([power.ravel() for power in powers])
    return stacked @ stacked.T


def minimal_polynomial_oracle(matrix: np.ndarray, tol: float = DEFAULT_ORACLE_TOL) -> Polynomial:
    """
    Minimal polynomial of any square matrix by the Gram-rank method.

    Args:
        matrix: n x n real matrix, n <= 16
        tol: Relative rank-decision tolerance

    Returns:
        Monic minimal polynomial

    Raises:
        RankDecisionAmbiguous: If a Gram eigenvalue is too close to the threshold
            or the kernel at the critical degree is not one-dimensional
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    matrix = _as_square(matrix)
    n = matrix.shape[0]
    if n > MAX_DIMENSION:
        raise ValueError(f"oracle is limited to n <= {MAX_DIMENSION}, got {n}")

    # Work on X / |X|_F so the vanishing-power test is relative; coefficients are
    # scaled back at the end.
    norm = float(np.linalg.norm(matrix))
    if norm == 0.0:
        return Polynomial.monomial(1)
    scaled = matrix / norm
    sequence = power_sequence(scaled, n)
    growth = 1.0 + float(np.linalg.norm(scaled))
    eps_floor = n * np.finfo(float).eps * 1e3

    for degree in range(1, n + 1):
        if sequence.scales[degree] <= tol * growth**degree:
            logger.debug(f"Power {degree} vanishes: minimal polynomial x^{degree}")
            return Polynomial.monomial(degree)

        basis = np.array([q.ravel() for q in sequence.normalized[: degree + 1]])
        gram = basis @ basis.T
        eigenvalues, eigenvectors = linalg.eigh(gram)
        threshold = max(tol, eps_floor) * float(eigenvalues[-1])
        smallest = float(eigenvalues[0])
        logger.debug(
            f"Gram degree {degree}: smallest eigenvalue {smallest:.3e}, threshold {threshold:.3e}"
        )

        if smallest > AMBIGUITY_FACTOR * threshold:
            continue
        if smallest >= threshold / AMBIGUITY_FACTOR:
            raise RankDecisionAmbiguous(
                f"Gram eigenvalue {smallest:.3e} at degree {degree} is within a factor "
                f"of {AMBIGUITY_FACTOR:g} of the threshold {threshold:.3e}"
            )

        kernel_dim = int(np.sum(eigenvalues <= threshold))
        if kernel_dim != 1:
            raise RankDecisionAmbiguous(
                f"kernel of the degree-{degree} Gram matrix has dimension {kernel_dim}"
            )

        kernel = eigenvectors[:, 0]
        if abs(kernel[-1]) <= eps_floor:
            raise RankDecisionAmbiguous(
                f"kernel vector at degree {degree} has a vanishing last coefficient"
            )

        # Refine: solve sum_{k<r} y_k Q_k = -Q_r in the least-squares sense.
        lower = basis[:degree].T
        refined, *_ = np.linalg.lstsq(lower, -basis[degree], rcond=None)
        kernel = np.append(refined, 1.0)

        scales = np.array(sequence.scales[: degree + 1])
        coeffs = kernel / scales
        coeffs = coeffs / coeffs[-1] * norm ** np.arange(degree, -1, -1, dtype=float)
        poly = Polynomial.from_coeffs(coeffs, tol=0.0)
        logger.debug(
            f"Oracle degree {degree}, residual {poly.residual(matrix):.3e}"
        )
        return poly

    raise RankDecisionAmbiguous(f"no rank drop found up to degree {n}")


def characteristic_polynomial(matrix: np.ndarray) -> Polynomial:
    """
    Characteristic polynomial by the Faddeev-LeVerrier trace recurrence.

    Args:
        matrix: n x n real matrix, n <= 16

    Returns:
        Monic degree-n polynomial det(xI - X)
    """
    matrix = _as_square(matrix)
    n = matrix.shape[0]
    if n > MAX_DIMENSION:
        raise ValueError(f"characteristic polynomial is limited to n <= {MAX_DIMENSION}")
    identity = np.eye(n)
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    current = np.zeros((n, n))
    for k in range(1, n + 1):
        current = matrix @ current + coeffs[n - k + 1] * identity
        coeffs[n - k] = -np.trace(matrix @ current) / k
    return Polynomial(tuple(coeffs))
