"""
Octonions as pairs of quaternions and their left/right multiplication matrices.

Doubling product (a1, a2)(b1, b2) = (a1 b1 - conj(b2) a2, b2 a1 + a2 conj(b1)).
Coordinates of (x1, x2) are the eight components of x1 followed by x2.
"""

import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ..algebra.quaternion import ONE, Quaternion, as_quaternion
from ..algebra.tensor import product_tensor
from ..errors import ConsistencyViolation, ZeroProduct
from ..minpoly.polynomial import Polynomial

logger = logging.getLogger(__name__)

I13 = np.diag([1.0, -1.0, -1.0, -1.0])
ANNIHILATOR_TOL = 1e-10


@dataclass(frozen=True)
class Octonion:
    a1: Quaternion = Quaternion()
    a2: Quaternion = Quaternion()

    @classmethod
    def from_array(cls, values: Iterable[float]) -> "Octonion":
        values = np.asarray(list(values), dtype=float)
        if values.shape != (8,):
            raise ValueError(f"an octonion needs 8 components, got {values.size}")
        return cls(Quaternion.from_array(values[:4]), Quaternion.from_array(values[4:]))

    @classmethod
    def unit(cls, index: int) -> "Octonion":
        values = np.zeros(8)
        values[index] = 1.0
        return cls.from_array(values)

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.a1.as_array(), self.a2.as_array()])

    @property
    def real(self) -> float:
        return self.a1.real

    def conj(self) -> "Octonion":
        return Octonion(self.a1.conj(), -self.a2)

    def norm2(self) -> float:
        return self.a1.norm2() + self.a2.norm2()

    def norm(self) -> float:
        return float(np.sqrt(self.norm2()))

    def dot(self, other: "Octonion") -> float:
        return float(np.dot(self.as_array(), other.as_array()))

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.a1 + other.a1, self.a2 + other.a2)

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.a1 - other.a1, self.a2 - other.a2)

    def __neg__(self) -> "Octonion":
        return Octonion(-self.a1, -self.a2)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Octonion(self.a1 * float(other), self.a2 * float(other))
        return octonion_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Octonion(self.a1 * float(other), self.a2 * float(other))
        return NotImplemented


def octonion_mul(a: Octonion, b: Octonion) -> Octonion:
    """Cayley-Dickson product; |ab| = |a||b|."""
    return Octonion(
        a.a1 * b.a1 - b.a2.conj() * a.a2,
        b.a2 * a.a1 + a.a2 * b.a1.conj(),
    )


def _m(p, q) -> np.ndarray:
    """M_{p (x) q}: h -> p h conj(q)."""
    return product_tensor(as_quaternion(p), as_quaternion(q)).to_matrix()


def omega(a: Octonion) -> np.ndarray:
    """Left multiplication x -> a x."""
    return np.block(
        [
            [_m(a.a1, ONE), -_m(ONE, a.a2.conj()) @ I13],
            [_m(a.a2, ONE) @ I13, _m(ONE, a.a1.conj())],
        ]
    )


def theta(a: Octonion) -> np.ndarray:
    """Right multiplication x -> x a."""
    return np.block(
        [
            [_m(ONE, a.a1.conj()), -_m(a.a2.conj(), ONE)],
            [_m(a.a2, ONE), _m(ONE, a.a1)],
        ]
    )


def octonion_minpoly(a: Octonion) -> Polynomial:
    """x^2 - 2 Re(a) x + |a|^2, annihilating omega(a) and theta(a); x - a for real a."""
    if not np.any(a.as_array()[1:]):
        return Polynomial.linear(a.real)
    return Polynomial((a.norm2(), -2.0 * a.real, 1.0))


def _checked_annihilator(poly: Polynomial, matrix: np.ndarray, what: str, tol: float) -> Polynomial:
    residual = poly.residual(matrix)
    scale = max(1.0, float(np.max(np.abs(matrix)))) ** 2
    if residual > tol * scale:
        raise ConsistencyViolation(f"{what}: annihilation residual {residual:.3e}")
    logger.debug(f"{what}: residual {residual:.3e}")
    return poly


def omega_product_annihilator(
    a: Octonion, b: Octonion, tol: float = ANNIHILATOR_TOL
) -> Polynomial:
    """
    x^2 - 2<a, conj(b)> x + |a|^2 |b|^2, which annihilates omega(a) omega(b).

    Raises:
        ZeroProduct: If ab vanishes
        ConsistencyViolation: If the polynomial fails to annihilate the product
    """
    product = octonion_mul(a, b)
    if product.norm() <= tol:
        raise ZeroProduct("ab = 0")
    poly = Polynomial((a.norm2() * b.norm2(), -2.0 * a.dot(b.conj()), 1.0))
    return _checked_annihilator(poly, omega(a) @ omega(b), "omega(a) omega(b)", tol)


def theta_product_annihilator(
    a: Octonion, b: Octonion, tol: float = ANNIHILATOR_TOL
) -> Polynomial:
    """
    x^2 - 2 Re(ba) x + |ba|^2, which annihilates theta(a) theta(b).

    Raises:
        ZeroProduct: If ba vanishes
        ConsistencyViolation: If the polynomial fails to annihilate the product
    """
    product = octonion_mul(b, a)
    if product.norm() <= tol:
        raise ZeroProduct("ba = 0")
    poly = Polynomial((product.norm2(), -2.0 * product.real, 1.0))
    return _checked_annihilator(poly, theta(a) @ theta(b), "theta(a) theta(b)", tol)
