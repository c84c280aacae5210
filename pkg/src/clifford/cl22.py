"""
Cl(2,2) realized as 4x4 real matrices through H (x) H.

Generators f1 = -j (x) k, f2 = i (x) k (square +I) and f3 = -1 (x) i,
f4 = -1 (x) j (square -I). Reversion fixes grades 0, 1 and 4, which gives
the class a + p (x) k + 1 (x) s with s.k = 0; Clifford conjugation fixes
grades 0, 3 and 4, which gives a + k (x) p + q (x) 1 with q.k = 0.

Passing to Cl(3,1) gives the same reversion-fixed class, while its
Clifford-conjugation-fixed elements are the skew-Hamiltonian matrices.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..algebra.quaternion import I_UNIT, J_UNIT, K_UNIT, ONE, PureQuaternion, as_vector
from ..algebra.tensor import basis_matrix, matrix_to_tensor, product_tensor
from ..minpoly.polynomial import Polynomial
from .blades import (
    Blade,
    blade_label,
    blade_table,
    compose,
    conjugation_sign,
    decompose,
    reversion_sign,
    validate_generators,
)

logger = logging.getLogger(__name__)

CL22_SQUARES = (1, 1, -1, -1)
CLASS_TOL = 1e-12


@lru_cache(maxsize=1)
def _generators() -> Tuple[np.ndarray, ...]:
    generators = (
        -product_tensor(J_UNIT, K_UNIT).to_matrix(),
        product_tensor(I_UNIT, K_UNIT).to_matrix(),
        -product_tensor(ONE, I_UNIT).to_matrix(),
        -product_tensor(ONE, J_UNIT).to_matrix(),
    )
    validate_generators(generators, CL22_SQUARES)
    for e in generators:
        e.setflags(write=False)
    return generators


def cl22_generators() -> List[np.ndarray]:
    """The four 1-vectors f1..f4 as 4x4 matrices (validated on first use)."""
    return [e.copy() for e in _generators()]


@lru_cache(maxsize=1)
def cl22_blades() -> Dict[Blade, np.ndarray]:
    return blade_table(_generators())


def _graded_involution(matrix: np.ndarray, sign) -> np.ndarray:
    coefficients = decompose(matrix, cl22_blades())
    flipped = {blade: sign(len(blade)) * value for blade, value in coefficients.items()}
    return compose(flipped, cl22_blades())


def cl22_reversion(matrix: np.ndarray) -> np.ndarray:
    """Reverse the order of generators in every blade."""
    return _graded_involution(matrix, reversion_sign)


def cl22_clifford_conjugation(matrix: np.ndarray) -> np.ndarray:
    """Reversion composed with the grade involution."""
    return _graded_involution(matrix, conjugation_sign)


def _no_k(vector, name: str) -> PureQuaternion:
    v = as_vector(vector)
    if v[2] != 0.0:
        raise ValueError(f"{name} must have no k-component, got {v[2]:g}")
    return PureQuaternion.from_array(v)


def cl22_reversion_fixed_matrix(a: float, p, s) -> np.ndarray:
    """a(1 (x) 1) + p (x) k + 1 (x) s with s.k = 0."""
    s = _no_k(s, "s")
    p = PureQuaternion.from_array(as_vector(p))
    tensor = product_tensor(ONE, ONE).scaled(a) + product_tensor(p, K_UNIT) + product_tensor(ONE, s)
    return tensor.to_matrix()


def cl22_conjugation_fixed_matrix(a: float, p, q) -> np.ndarray:
    """a(1 (x) 1) + k (x) p + q (x) 1 with q.k = 0."""
    q = _no_k(q, "q")
    p = PureQuaternion.from_array(as_vector(p))
    tensor = product_tensor(ONE, ONE).scaled(a) + product_tensor(K_UNIT, p) + product_tensor(q, ONE)
    return tensor.to_matrix()


def _quadratic(a: float, constant: float, nonscalar: bool) -> Polynomial:
    # (X - a)^2 = constant
    if not nonscalar:
        return Polynomial.linear(a)
    return Polynomial((-(constant - a * a), -2.0 * a, 1.0))


def cl22_fixed_by_reversion_minpoly(a: float, p, s) -> Polynomial:
    """
    Minimal polynomial of a(1 (x) 1) + p (x) k + 1 (x) s.

    (X - a)^2 = (p.p - s.s)(1 (x) 1) since k s + s k = 0, hence
    x^2 - 2ax - (p.p - s.s - a^2).

    Args:
        a: Scalar part
        p: Pure quaternion
        s: Pure quaternion with no k-component

    Returns:
        The quadratic (x - a when p and s vanish)
    """
    s = _no_k(s, "s")
    p = PureQuaternion.from_array(as_vector(p))
    return _quadratic(a, p.norm2() - s.norm2(), not (p.is_zero() and s.is_zero()))


def cl22_antifixed_by_reversion_minpoly(a: float, p, q) -> Polynomial:
    """
    Minimal polynomial of a(1 (x) 1) + k (x) p + q (x) 1, q.k = 0.

    This is the Clifford-conjugation-fixed class; its non-scalar part is
    reversion-odd. (X - a)^2 = (p.p - q.q)(1 (x) 1), hence
    x^2 - 2ax - (p.p - q.q - a^2).
    """
    q = _no_k(q, "q")
    p = PureQuaternion.from_array(as_vector(p))
    return _quadratic(a, p.norm2() - q.norm2(), not (p.is_zero() and q.is_zero()))


def _is_self_adjoint(matrix: np.ndarray, form: np.ndarray, tol: float) -> bool:
    adjoint = np.linalg.solve(form, matrix.T @ form)
    return bool(np.max(np.abs(adjoint - matrix)) <= tol * max(1.0, float(np.max(np.abs(matrix)))))


def is_self_adjoint_one_k(matrix: np.ndarray, tol: float = CLASS_TOL) -> bool:
    """(M_{1 (x) k})^-1 X^T M_{1 (x) k} = X."""
    return _is_self_adjoint(np.asarray(matrix, dtype=float), basis_matrix(0, 3), tol)


def is_self_adjoint_k_one(matrix: np.ndarray, tol: float = CLASS_TOL) -> bool:
    """(M_{k (x) 1})^-1 X^T M_{k (x) 1} = X."""
    return _is_self_adjoint(np.asarray(matrix, dtype=float), basis_matrix(3, 0), tol)


@dataclass
class Cl22Classification:
    """Blade decomposition of a 4x4 matrix and its Cl(2,2) class membership."""

    coefficients: Dict[Blade, float]
    reversion_fixed: bool
    conjugation_fixed: bool
    minimal_polynomial: Optional[Polynomial] = None
    params: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "reversion_fixed": self.reversion_fixed,
            "conjugation_fixed": self.conjugation_fixed,
            "minimal_polynomial": (
                self.minimal_polynomial.to_list() if self.minimal_polynomial else None
            ),
            "params": self.params,
            "blades": {
                blade_label(blade): value
                for blade, value in self.coefficients.items()
                if value != 0.0
            },
        }


def cl22_classify(matrix: np.ndarray, tol: float = 1e-9) -> Cl22Classification:
    """
    Decompose a 4x4 matrix on the Cl(2,2) blades and test both fixed classes.

    When the matrix lies in a fixed class, its parameters and quadratic
    minimal polynomial are included.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {matrix.shape}")
    scale = max(1.0, float(np.max(np.abs(matrix))))
    coefficients = {
        blade: (0.0 if abs(value) <= tol * scale else value)
        for blade, value in decompose(matrix, cl22_blades()).items()
    }

    reversion_fixed = bool(np.max(np.abs(cl22_reversion(matrix) - matrix)) <= tol * scale)
    conjugation_fixed = bool(
        np.max(np.abs(cl22_clifford_conjugation(matrix) - matrix)) <= tol * scale
    )

    c = matrix_to_tensor(matrix).coeffs
    c = np.where(np.abs(c) <= tol * scale, 0.0, c)
    result = Cl22Classification(coefficients, reversion_fixed, conjugation_fixed)
    if reversion_fixed:
        a, p, s = c[0, 0], c[1:, 3], np.array([c[0, 1], c[0, 2], 0.0])
        result.params = {"class": "reversion-fixed", "a": float(a), "p": p.tolist(), "s": s.tolist()}
        result.minimal_polynomial = cl22_fixed_by_reversion_minpoly(a, p, s)
    elif conjugation_fixed:
        a, p, q = c[0, 0], c[3, 1:], np.array([c[1, 0], c[2, 0], 0.0])
        result.params = {"class": "conjugation-fixed", "a": float(a), "p": p.tolist(), "q": q.tolist()}
        result.minimal_polynomial = cl22_antifixed_by_reversion_minpoly(a, p, q)
    logger.debug(
        f"Cl(2,2) class: reversion_fixed={reversion_fixed}, conjugation_fixed={conjugation_fixed}"
    )
    return result
