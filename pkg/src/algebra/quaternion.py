"""Quaternion arithmetic and the R^3 vector identities used by the closed forms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

Vec3 = np.ndarray
VectorLike = Union["PureQuaternion", Sequence[float], np.ndarray]


@dataclass(frozen=True)
class Quaternion:
    """Element w + xi + yj + zk of H."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, values: Iterable[float]) -> "Quaternion":
        """Build from four components ordered (1, i, j, k)."""
        w, x, y, z = (float(v) for v in values)
        return cls(w, x, y, z)

    @classmethod
    def from_parts(cls, real: float, imag: VectorLike) -> "Quaternion":
        """Build from a scalar part and a pure part."""
        x, y, z = as_vector(imag)
        return cls(float(real), float(x), float(y), float(z))

    @property
    def real(self) -> float:
        return self.w

    @property
    def imag(self) -> "PureQuaternion":
        return PureQuaternion(self.x, self.y, self.z)

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=float)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def normalized(self) -> "Quaternion":
        n = self.norm()
        if n == 0.0:
            raise ZeroDivisionError("cannot normalize the zero quaternion")
        return self.scaled(1.0 / n)

    def scaled(self, factor: float) -> "Quaternion":
        return Quaternion(
            factor * self.w, factor * self.x, factor * self.y, factor * self.z
        )

    def is_zero(self) -> bool:
        return self.w == 0.0 and self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def __add__(self, other: "Quaternion") -> "Quaternion":
        other = as_quaternion(other)
        return Quaternion(
            self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z
        )

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        other = as_quaternion(other)
        return Quaternion(
            self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z
        )

    def __neg__(self) -> "Quaternion":
        return self.scaled(-1.0)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return self.scaled(float(other))
        return quat_mul(self, as_quaternion(other))

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scaled(float(other))
        return quat_mul(as_quaternion(other), self)


@dataclass(frozen=True)
class PureQuaternion:
    """Purely imaginary quaternion xi + yj + zk, interchangeable with an R^3 vector."""

    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, values: Iterable[float]) -> "PureQuaternion":
        x, y, z = (float(v) for v in values)
        return cls(x, y, z)

    def as_vector(self) -> Vec3:
        return np.array([self.x, self.y, self.z], dtype=float)

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    def dot(self, other: VectorLike) -> float:
        return float(np.dot(self.as_vector(), as_vector(other)))

    def cross(self, other: VectorLike) -> "PureQuaternion":
        return PureQuaternion.from_array(np.cross(self.as_vector(), as_vector(other)))

    def norm2(self) -> float:
        return self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def scaled(self, factor: float) -> "PureQuaternion":
        return PureQuaternion(factor * self.x, factor * self.y, factor * self.z)

    def is_zero(self) -> bool:
        return self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def __add__(self, other: "PureQuaternion") -> "PureQuaternion":
        return PureQuaternion.from_array(self.as_vector() + as_vector(other))

    def __sub__(self, other: "PureQuaternion") -> "PureQuaternion":
        return PureQuaternion.from_array(self.as_vector() - as_vector(other))

    def __neg__(self) -> "PureQuaternion":
        return self.scaled(-1.0)


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I_UNIT = PureQuaternion(1.0, 0.0, 0.0)
J_UNIT = PureQuaternion(0.0, 1.0, 0.0)
K_UNIT = PureQuaternion(0.0, 0.0, 1.0)
ZERO_VECTOR = PureQuaternion()


def as_vector(value: VectorLike) -> Vec3:
    """Coerce a pure quaternion or 3-sequence to a float vector."""
    if isinstance(value, PureQuaternion):
        return value.as_vector()
    if isinstance(value, Quaternion):
        return np.array([value.x, value.y, value.z], dtype=float)
    vector = np.asarray(value, dtype=float)
    if vector.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {vector.shape}")
    return vector


def as_quaternion(value) -> Quaternion:
    """Coerce pure quaternions, reals and 4-sequences to a Quaternion."""
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, PureQuaternion):
        return value.as_quaternion()
    if isinstance(value, (int, float)):
        return Quaternion(float(value))
    return Quaternion.from_array(value)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ab."""
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def pure_mul(p: VectorLike, q: VectorLike) -> Quaternion:
    """
    Product of two pure quaternions.

    Returns:
        -(p.q) + p x q
    """
    u, v = as_vector(p), as_vector(q)
    return Quaternion.from_parts(-float(np.dot(u, v)), np.cross(u, v))


def vector_triple(p: VectorLike, q: VectorLike, r: VectorLike) -> Vec3:
    """
    Expand p x (q x r).

    Returns:
        (p.r)q - (p.q)r
    """
    u, v, w = as_vector(p), as_vector(q), as_vector(r)
    return float(np.dot(u, w)) * v - float(np.dot(u, v)) * w
