"""Cayley transform of skew-Hamiltonian matrices through their quadratic minimal polynomial."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np
from scipy import linalg

from ..algebra.quaternion import PureQuaternion, as_vector
from ..errors import SpectrumContainsMinusOne
from ..families.params import SkewHamiltonianParams

logger = logging.getLogger(__name__)

DEFAULT_CAYLEY_TOL = 1e-12


@dataclass(frozen=True)
class CayleyCoefficients:
    """psi_C(A) = c0 I + c1 A."""

    c0: float
    c1: float

    def apply(self, matrix: np.ndarray) -> np.ndarray:
        matrix = np.asarray(matrix, dtype=float)
        return self.c0 * np.eye(matrix.shape[0]) + self.c1 * matrix

    def to_dict(self) -> Dict[str, Any]:
        return {"c0": self.c0, "c1": self.c1}


def cayley_transform_direct(matrix: np.ndarray) -> np.ndarray:
    """
    (I - A)(I + A)^-1 by a linear solve.

    I - A and I + A commute, so the product equals (I + A)^-1 (I - A).

    Raises:
        SpectrumContainsMinusOne: If I + A is singular
    """
    matrix = np.asarray(matrix, dtype=float)
    identity = np.eye(matrix.shape[0])
    try:
        return linalg.solve(identity + matrix, identity - matrix)
    except linalg.LinAlgError as e:
        raise SpectrumContainsMinusOne(f"I + A is singular: {e}")


def cayley_skew_hamiltonian(
    b: float, p, c: float, d: float, tol: float = DEFAULT_CAYLEY_TOL
) -> Tuple[CayleyCoefficients, np.ndarray]:
    """
    Cayley transform of A = b + p (x) j + c (1 (x) i) + d (1 (x) k).

    The quadratic minimal polynomial x^2 - 2bx + kappa reduces psi_C(A) to
    c0 I + c1 A with c0 = (2b + 1 - kappa)/(2b + 1 + kappa) and
    c1 = -2/(2b + 1 + kappa).

    Args:
        b, p, c, d: Skew-Hamiltonian parameters
        tol: Relative tolerance on the denominator (1 + b)^2 - mu^2

    Returns:
        (coefficients, psi_C(A))

    Raises:
        SpectrumContainsMinusOne: If -1 is an eigenvalue of A
    """
    params = SkewHamiltonianParams(b, PureQuaternion.from_array(as_vector(p)), c, d)
    b, kappa = params.b, params.kappa
    denominator = 2.0 * b + 1.0 + kappa
    scale = max(1.0, (1.0 + abs(b)) ** 2 + abs(params.mu2))
    if abs(denominator) <= tol * scale:
        raise SpectrumContainsMinusOne(
            f"-1 is an eigenvalue (b = {b:g}, mu^2 = {params.mu2:g})"
        )

    coefficients = CayleyCoefficients(
        c0=(2.0 * b + 1.0 - kappa) / denominator,
        c1=-2.0 / denominator,
    )
    transform = coefficients.apply(params.matrix())
    logger.debug(f"Cayley coefficients c0={coefficients.c0:.6g}, c1={coefficients.c1:.6g}")
    return coefficients, transform
