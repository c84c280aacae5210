"""
The H (x) H <-> M(4, R) isomorphism.

The basis matrix of e_x (x) e_y is the matrix of h -> e_x h conj(e_y) in the
ordered basis (1, i, j, k). The sixteen matrices are generated from that map,
never typed in.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import numpy as np

from .quaternion import Quaternion, as_quaternion, quat_mul

BASIS_LABELS: Tuple[str, ...] = ("1", "i", "j", "k")

# Coefficient (x, y) is negated by conjugation iff exactly one index is imaginary.
CONJUGATION_SIGNS = np.array(
    [[1.0 if (x == 0) == (y == 0) else -1.0 for y in range(4)] for x in range(4)]
)

ROUND_TRIP_TOL = 1e-12


def _unit(index: int) -> Quaternion:
    components = [0.0, 0.0, 0.0, 0.0]
    components[index] = 1.0
    return Quaternion.from_array(components)


@lru_cache(maxsize=None)
def _basis_table() -> np.ndarray:
    """All sixteen basis matrices, indexed [x, y, row, column]."""
    table = np.zeros((4, 4, 4, 4))
    for x in range(4):
        left = _unit(x)
        for y in range(4):
            right = _unit(y).conj()
            for column in range(4):
                image = quat_mul(quat_mul(left, _unit(column)), right)
                table[x, y, :, column] = image.as_array()
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def _structure_constants() -> np.ndarray:
    """S[a, c, m] = coefficient of e_m in e_a e_c."""
    constants = np.zeros((4, 4, 4))
    for a in range(4):
        for c in range(4):
            constants[a, c, :] = quat_mul(_unit(a), _unit(c)).as_array()
    constants.setflags(write=False)
    return constants


@dataclass(frozen=True, eq=False)
class TensorElement:
    """Element of H (x) H stored as its 4x4 coefficient array c[x][y]."""

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float)
        if coeffs.shape != (4, 4):
            raise ValueError(f"coefficient array must be 4x4, got {coeffs.shape}")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls) -> "TensorElement":
        return cls(np.zeros((4, 4)))

    @classmethod
    def unit(cls, x: int, y: int, scale: float = 1.0) -> "TensorElement":
        coeffs = np.zeros((4, 4))
        coeffs[x, y] = scale
        return cls(coeffs)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "TensorElement":
        return matrix_to_tensor(matrix)

    def to_matrix(self) -> np.ndarray:
        return tensor_to_matrix(self)

    def conj(self) -> "TensorElement":
        return tensor_conj(self)

    def scalar_part(self) -> float:
        """Coefficient of 1 (x) 1, i.e. a quarter of the trace."""
        return float(self.coeffs[0, 0])

    def scaled(self, factor: float) -> "TensorElement":
        return TensorElement(factor * self.coeffs)

    def allclose(self, other: "TensorElement", atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=0.0, atol=atol))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(self.coeffs + other.coeffs)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(self.coeffs - other.coeffs)

    def __neg__(self) -> "TensorElement":
        return self.scaled(-1.0)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        return self.scaled(float(other))

    def __rmul__(self, other):
        return self.scaled(float(other))

    def __repr__(self) -> str:
        terms = []
        for x in range(4):
            for y in range(4):
                value = self.coeffs[x, y]
                if value != 0.0:
                    terms.append(f"{value:+g} {BASIS_LABELS[x]}(x){BASIS_LABELS[y]}")
        return f"TensorElement({' '.join(terms) or '0'})"


def basis_matrix(x: int, y: int) -> np.ndarray:
    """
    Matrix of h -> e_x h conj(e_y) for e in (1, i, j, k).

    Args:
        x: Left basis index 0..3
        y: Right basis index 0..3

    Returns:
        4x4 matrix (a fresh, writable copy)
    """
    if not (0 <= x < 4 and 0 <= y < 4):
        raise IndexError(f"basis indices must lie in 0..3, got ({x}, {y})")
    return np.array(_basis_table()[x, y])


def symplectic_form() -> np.ndarray:
    """J4 = M_{1 (x) j}."""
    return basis_matrix(0, 2)


def flip_form() -> np.ndarray:
    """R4 = M_{j (x) i}, the anti-diagonal flip."""
    return basis_matrix(2, 1)


def tensor_to_matrix(tensor: TensorElement) -> np.ndarray:
    """Sum of c[x][y] * basis_matrix(x, y)."""
    return np.einsum("xy,xyij->ij", tensor.coeffs, _basis_table())


def matrix_to_tensor(matrix: np.ndarray) -> TensorElement:
    """Project a 4x4 matrix on the basis: c[x][y] = trace(B_xy^T M) / 4."""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {matrix.shape}")
    return TensorElement(np.einsum("xyij,ij->xy", _basis_table(), matrix) / 4.0)


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    """Product extended bilinearly from (p (x) q)(r (x) s) = pr (x) qs."""
    constants = _structure_constants()
    product = np.einsum(
        "ab,cd,acm,bdn->mn", a.coeffs, b.coeffs, constants, constants
    )
    return TensorElement(product)


def tensor_conj(tensor: TensorElement) -> TensorElement:
    """Conjugation p (x) q -> conj(p) (x) conj(q); its matrix is the transpose."""
    return TensorElement(CONJUGATION_SIGNS * tensor.coeffs)


def product_tensor(p, q) -> TensorElement:
    """Coefficient array of p (x) q (outer product of components)."""
    left = as_quaternion(p).as_array()
    right = as_quaternion(q).as_array()
    return TensorElement(np.outer(left, right))


def tensor_sum(terms: Sequence[Tuple[object, object]]) -> TensorElement:
    """Sum of product tensors given as (p, q) pairs."""
    total = np.zeros((4, 4))
    for p, q in terms:
        total += product_tensor(p, q).coeffs
    return TensorElement(total)


def is_tensor_of(
    matrix: np.ndarray, tensor: TensorElement, tol: Optional[float] = None
) -> bool:
    """Round-trip rule: |M - matrix(T)|_F <= tol * (1 + |M|_F)."""
    tol = ROUND_TRIP_TOL if tol is None else tol
    matrix = np.asarray(matrix, dtype=float)
    error = np.linalg.norm(matrix - tensor_to_matrix(tensor))
    return bool(error <= tol * (1.0 + np.linalg.norm(matrix)))
