"""Structured matrix families and their quaternionic representation parameters."""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, ClassVar, Dict, List

import numpy as np

from ..algebra.quaternion import ONE, PureQuaternion, Quaternion, as_vector
from ..algebra.tensor import TensorElement, product_tensor, tensor_to_matrix


class FamilyTag(Enum):
    """Matrix families with a closed-form minimal polynomial."""

    SKEW_SYMMETRIC = "skew-symmetric"
    HAMILTONIAN = "hamiltonian"
    PERSKEW = "perskew"
    SYMMETRIC = "symmetric"
    SKEW_HAMILTONIAN = "skew-hamiltonian"
    SO4 = "so4"

    @property
    def display_name(self) -> str:
        return _DISPLAY_NAMES[self]

    @classmethod
    def ordered(cls, tags) -> List["FamilyTag"]:
        """Sort tags in declaration order."""
        order = list(cls)
        return sorted(tags, key=order.index)


_DISPLAY_NAMES = {
    FamilyTag.SKEW_SYMMETRIC: "SkewSymmetric",
    FamilyTag.HAMILTONIAN: "Hamiltonian",
    FamilyTag.PERSKEW: "Perskewsymmetric",
    FamilyTag.SYMMETRIC: "Symmetric",
    FamilyTag.SKEW_HAMILTONIAN: "SkewHamiltonian",
    FamilyTag.SO4: "SpecialOrthogonal",
}


def _vector_dict(vector: PureQuaternion) -> List[float]:
    return [float(vector.x), float(vector.y), float(vector.z)]


def _pure(value) -> PureQuaternion:
    if isinstance(value, PureQuaternion):
        return value
    return PureQuaternion.from_array(as_vector(value))


def _unit_tensor(x: int, y: int, scale: float) -> TensorElement:
    return TensorElement.unit(x, y, scale)


class FamilyParams(ABC):
    """Base class for extracted representation parameters."""

    family: ClassVar[FamilyTag]

    @abstractmethod
    def tensor(self) -> TensorElement:
        """H (x) H element represented by these parameters."""
        pass

    @abstractmethod
    def components(self) -> List[float]:
        """Flat list of every real parameter."""
        pass

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        pass

    def matrix(self) -> np.ndarray:
        return tensor_to_matrix(self.tensor())

    def magnitude(self) -> float:
        """Euclidean norm of all parameters, used to scale branch tolerances."""
        return math.sqrt(sum(value * value for value in self.components()))


@dataclass(frozen=True)
class SkewSymmetricParams(FamilyParams):
    """X = s (x) 1 + 1 (x) t."""

    s: PureQuaternion
    t: PureQuaternion

    family: ClassVar[FamilyTag] = FamilyTag.SKEW_SYMMETRIC

    def __post_init__(self):
        object.__setattr__(self, "s", _pure(self.s))
        object.__setattr__(self, "t", _pure(self.t))

    def tensor(self) -> TensorElement:
        return product_tensor(self.s, ONE) + product_tensor(ONE, self.t)

    def components(self) -> List[float]:
        return _vector_dict(self.s) + _vector_dict(self.t)

    def to_dict(self) -> Dict[str, Any]:
        return {"s": _vector_dict(self.s), "t": _vector_dict(self.t)}


@dataclass(frozen=True)
class HamiltonianParams(FamilyParams):
    """H = b (1 (x) j) + p (x) 1 + q (x) i + r (x) k."""

    b: float
    p: PureQuaternion
    q: PureQuaternion
    r: PureQuaternion

    family: ClassVar[FamilyTag] = FamilyTag.HAMILTONIAN

    def __post_init__(self):
        object.__setattr__(self, "b", float(self.b))
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, _pure(getattr(self, name)))

    def tensor(self) -> TensorElement:
        coeffs = np.zeros((4, 4))
        coeffs[0, 2] = self.b
        coeffs[1:, 0] = self.p.as_vector()
        coeffs[1:, 1] = self.q.as_vector()
        coeffs[1:, 3] = self.r.as_vector()
        return TensorElement(coeffs)

    def components(self) -> List[float]:
        return [self.b] + _vector_dict(self.p) + _vector_dict(self.q) + _vector_dict(self.r)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "b": self.b,
            "p": _vector_dict(self.p),
            "q": _vector_dict(self.q),
            "r": _vector_dict(self.r),
        }


@dataclass(frozen=True)
class PerskewParams(FamilyParams):
    """
    P = alpha (1 (x) i) + beta (j (x) 1) + r (x) i + j (x) s.

    r is confined to span{i, k} and s to span{j, k}.
    """

    r: PureQuaternion
    s: PureQuaternion
    alpha: float
    beta: float

    family: ClassVar[FamilyTag] = FamilyTag.PERSKEW

    def __post_init__(self):
        r, s = _pure(self.r), _pure(self.s)
        if r.y != 0.0:
            raise ValueError(f"r must lie in span{{i, k}}, got j-component {r.y}")
        if s.x != 0.0:
            raise ValueError(f"s must lie in span{{j, k}}, got i-component {s.x}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))

    def tensor(self) -> TensorElement:
        coeffs = np.zeros((4, 4))
        coeffs[0, 1] = self.alpha
        coeffs[2, 0] = self.beta
        coeffs[1, 1] = self.r.x
        coeffs[3, 1] = self.r.z
        coeffs[2, 2] = self.s.y
        coeffs[2, 3] = self.s.z
        return TensorElement(coeffs)

    def components(self) -> List[float]:
        return [self.alpha, self.beta, self.r.x, self.r.z, self.s.y, self.s.z]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": _vector_dict(self.r),
            "s": _vector_dict(self.s),
            "alpha": self.alpha,
            "beta": self.beta,
        }


@dataclass(frozen=True)
class SymmetricParams(FamilyParams):
    """S = a (1 (x) 1) + p (x) i + q (x) j + r (x) k."""

    a: float
    p: PureQuaternion
    q: PureQuaternion
    r: PureQuaternion

    family: ClassVar[FamilyTag] = FamilyTag.SYMMETRIC

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, _pure(getattr(self, name)))

    def tensor(self) -> TensorElement:
        coeffs = np.zeros((4, 4))
        coeffs[0, 0] = self.a
        coeffs[1:, 1] = self.p.as_vector()
        coeffs[1:, 2] = self.q.as_vector()
        coeffs[1:, 3] = self.r.as_vector()
        return TensorElement(coeffs)

    def column_matrix(self) -> np.ndarray:
        """The 3x3 matrix [p | q | r]."""
        return np.column_stack(
            [self.p.as_vector(), self.q.as_vector(), self.r.as_vector()]
        )

    def traceless(self) -> "SymmetricParams":
        return SymmetricParams(0.0, self.p, self.q, self.r)

    def components(self) -> List[float]:
        return [self.a] + _vector_dict(self.p) + _vector_dict(self.q) + _vector_dict(self.r)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": self.a,
            "p": _vector_dict(self.p),
            "q": _vector_dict(self.q),
            "r": _vector_dict(self.r),
        }


@dataclass(frozen=True)
class SkewHamiltonianParams(FamilyParams):
    """W = b (1 (x) 1) + p (x) j + c (1 (x) i) + d (1 (x) k)."""

    b: float
    p: PureQuaternion
    c: float
    d: float

    family: ClassVar[FamilyTag] = FamilyTag.SKEW_HAMILTONIAN

    def __post_init__(self):
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "p", _pure(self.p))
        object.__setattr__(self, "c", float(self.c))
        object.__setattr__(self, "d", float(self.d))

    def tensor(self) -> TensorElement:
        coeffs = np.zeros((4, 4))
        coeffs[0, 0] = self.b
        coeffs[1:, 2] = self.p.as_vector()
        coeffs[0, 1] = self.c
        coeffs[0, 3] = self.d
        return TensorElement(coeffs)

    @property
    def theta2(self) -> float:
        """|p|^2 + c^2 + d^2; zero iff W is scalar."""
        return self.p.norm2() + self.c * self.c + self.d * self.d

    @property
    def mu2(self) -> float:
        """(W - bI)^2 = mu^2 I with mu^2 = |p|^2 - c^2 - d^2."""
        return self.p.norm2() - self.c * self.c - self.d * self.d

    @property
    def kappa(self) -> float:
        return self.b * self.b - self.mu2

    def components(self) -> List[float]:
        return [self.b] + _vector_dict(self.p) + [self.c, self.d]

    def to_dict(self) -> Dict[str, Any]:
        return {"b": self.b, "p": _vector_dict(self.p), "c": self.c, "d": self.d}


@dataclass(frozen=True)
class SpecialOrthogonalParams(FamilyParams):
    """G = u (x) v for unit quaternions u, v."""

    u: Quaternion
    v: Quaternion

    family: ClassVar[FamilyTag] = FamilyTag.SO4

    def tensor(self) -> TensorElement:
        return product_tensor(self.u, self.v)

    def negated(self) -> "SpecialOrthogonalParams":
        return SpecialOrthogonalParams(-self.u, -self.v)

    def components(self) -> List[float]:
        return list(self.u.as_array()) + list(self.v.as_array())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "u": [float(value) for value in self.u.as_array()],
            "v": [float(value) for value in self.v.as_array()],
        }
