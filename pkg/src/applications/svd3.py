"""
Singular values of 3x3 matrices from the symmetric 4x4 correspondence.

For Y = [p | q | r] the traceless symmetric X = p (x) i + q (x) j + r (x) k has
eigenvalues s1 + s2 + t s3, s1 - s2 - t s3, -s1 + s2 - t s3, -s1 - s2 + t s3
where s are the singular values of Y and t = sign det Y. Sorted in decreasing
order they follow exactly this pattern, which inverts to the singular values.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Tuple

import numpy as np

from ..minpoly.closed_form import DEFAULT_BRANCH_TOL, BranchReport, minpoly_symmetric
from ..minpoly.polynomial import Polynomial

logger = logging.getLogger(__name__)

CASE_ZERO = "zero"
CASE_RANK_ONE = "x²−c²"
CASE_RANK_TWO_EQUAL = "x³+cx"
CASE_ALL_EQUAL = "x²−2lx−λ²"
CASE_RANK_TWO_QUARTIC = "quartic-rank-two"
CASE_CUBIC_LEADING_PAIR = "cubic-σ1=σ2≠σ3"
CASE_CUBIC_TRAILING_PAIR = "cubic-σ2=σ3≠σ1"
CASE_QUARTIC = "quartic"


@dataclass(frozen=True)
class SingularTriple:
    """sigma1 >= sigma2 >= sigma3 >= 0 and tau = sign det Y."""

    sigma1: float
    sigma2: float
    sigma3: float
    tau: int

    def as_array(self) -> np.ndarray:
        return np.array([self.sigma1, self.sigma2, self.sigma3])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sigma": [self.sigma1, self.sigma2, self.sigma3],
            "tau": self.tau,
        }


@dataclass
class Svd3Report:
    singular: SingularTriple
    case: str
    eigenvalues: np.ndarray
    minimal_polynomial: Polynomial
    branch: BranchReport
    zero_eigenvalue: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            **self.singular.to_dict(),
            "case": self.case,
            "eigenvalues": [float(value) for value in self.eigenvalues],
            "minimal_polynomial": self.minimal_polynomial.to_list(),
            "branch": self.branch.branch,
            "zero_eigenvalue": self.zero_eigenvalue,
        }


def svd3_eigenvalues(sigma: Tuple[float, float, float], tau: int) -> np.ndarray:
    """Eigenvalues of X in the pattern order, from singular values and sign."""
    s1, s2, s3 = sigma
    t3 = tau * s3
    return np.array([s1 + s2 + t3, s1 - s2 - t3, -s1 + s2 - t3, -s1 - s2 + t3])


def _polished_roots(poly: Polynomial) -> List[float]:
    derivative = np.polynomial.polynomial.polyder(poly.as_array())
    roots = []
    for root in np.real(poly.roots()):
        slope = np.polynomial.polynomial.polyval(root, derivative)
        # One Newton step; skipped near a multiple root.
        if abs(slope) > 1e-8 * max(1.0, abs(root)) ** (poly.degree - 1):
            root = root - poly(root) / slope
        roots.append(float(root))
    return roots


def _match_multiplicities(
    roots: List[float], power_sums: Tuple[float, float, float], scale: float
) -> List[float]:
    """Assign multiplicities summing to 4 that best reproduce trace(X^k), k = 1..3."""
    best, best_error = None, np.inf
    for counts in product(range(1, 5), repeat=len(roots)):
        if sum(counts) != 4:
            continue
        error = 0.0
        for k, target in enumerate(power_sums, start=1):
            value = sum(m * root**k for m, root in zip(counts, roots))
            error += abs(value - target) / scale**k
        if error < best_error:
            best, best_error = counts, error
    expanded = []
    for m, root in zip(best, roots):
        expanded.extend([root] * m)
    return expanded


def svd3_analysis(matrix: np.ndarray, branch_tol: float = DEFAULT_BRANCH_TOL) -> Svd3Report:
    """
    Singular values, sign and case label of a 3x3 matrix.

    Args:
        matrix: 3x3 real matrix Y with columns p, q, r
        branch_tol: Tolerance for branch and equality decisions

    Returns:
        Svd3Report
    """
    y = np.asarray(matrix, dtype=float)
    if y.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {y.shape}")
    p, q, r = y[:, 0], y[:, 1], y[:, 2]

    poly, branch = minpoly_symmetric(0.0, p, q, r, branch_tol)
    lam2 = float(np.sum(y * y))
    triple = float(np.linalg.det(y))
    scale = max(1.0, float(np.sqrt(lam2)))

    if poly.degree == 1:
        eigenvalues = np.zeros(4)
    else:
        roots = _polished_roots(poly)
        eigenvalues = np.array(
            _match_multiplicities(roots, (0.0, 4.0 * lam2, 24.0 * triple), scale)
        )
    eigenvalues = np.sort(eigenvalues)[::-1]

    det_tol = branch_tol * scale**3
    tau = 0 if abs(triple) <= det_tol else int(np.sign(triple))
    l1, l2, l3, l4 = eigenvalues
    s1 = max(0.0, (l1 + l2) / 2.0)
    s2 = max(0.0, (l1 + l3) / 2.0)
    s3 = max(0.0, tau * (l1 + l4) / 2.0 if tau else abs(l1 + l4) / 2.0)
    singular = SingularTriple(s1, s2, s3, tau)

    case = classify_singular_values(singular, branch_tol * scale)
    zero_eigenvalue = bool(np.any(np.abs(eigenvalues) <= branch_tol * scale))
    logger.debug(f"3x3 singular values {singular.as_array()}, tau={tau}, case {case}")
    return Svd3Report(singular, case, eigenvalues, poly, branch, zero_eigenvalue)


def classify_singular_values(singular: SingularTriple, tol: float) -> str:
    """Case label relating the singular values to X's minimal polynomial."""
    s1, s2, s3 = singular.sigma1, singular.sigma2, singular.sigma3

    def same(a: float, b: float) -> bool:
        return abs(a - b) <= tol

    def zero(a: float) -> bool:
        return abs(a) <= tol

    if zero(s1):
        return CASE_ZERO
    if zero(s2) and zero(s3):
        return CASE_RANK_ONE
    if same(s1, s2) and zero(s3):
        return CASE_RANK_TWO_EQUAL
    if same(s1, s2) and same(s2, s3):
        return CASE_ALL_EQUAL
    if zero(s3):
        return CASE_RANK_TWO_QUARTIC
    if singular.tau != 0 and same(s1, s2):
        return CASE_CUBIC_LEADING_PAIR
    if singular.tau != 0 and same(s2, s3):
        return CASE_CUBIC_TRAILING_PAIR
    return CASE_QUARTIC


def singular_values_3x3(
    matrix: np.ndarray, branch_tol: float = DEFAULT_BRANCH_TOL
) -> Tuple[SingularTriple, str]:
    """Singular values and case label of a 3x3 matrix through its 4x4 symmetric image."""
    report = svd3_analysis(matrix, branch_tol)
    return report.singular, report.case
