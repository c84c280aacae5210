"""
Cl(0,6) realized as 8x8 real matrices.

Clifford conjugation is matrix transposition here, so the antisymmetric
matrices are exactly the combinations of 1-, 2-, 5- and 6-vectors.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from ..errors import UnsupportedGrade
from ..minpoly.polynomial import Polynomial
from .blades import Blade, blade_label, blade_table, compose, decompose, parse_blade, validate_generators

logger = logging.getLogger(__name__)

ANTISYMMETRIC_GRADES = frozenset({1, 2, 5, 6})
QUADRATIC_TOL = 1e-10

_EPS = np.array([[0.0, 1.0], [-1.0, 0.0]])
_X = np.array([[0.0, 1.0], [1.0, 0.0]])
_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
_I2 = np.eye(2)


def _kron(*factors: np.ndarray) -> np.ndarray:
    result = np.eye(1)
    for factor in factors:
        result = np.kron(result, factor)
    return result


@lru_cache(maxsize=1)
def _generators() -> Tuple[np.ndarray, ...]:
    # Pauli strings; each has an odd number of antisymmetric factors.
    generators = (
        _kron(_Z, _EPS, _I2),
        _kron(_EPS, _I2, _I2),
        _kron(_X, _EPS, _X),
        _kron(_X, _EPS, _Z),
        _kron(_X, _I2, _EPS),
        _kron(_Z, _X, _EPS),
    )
    validate_generators(generators, (-1,) * 6)
    for e in generators:
        e.setflags(write=False)
    return generators


def cl06_generators() -> List[np.ndarray]:
    """Six antisymmetric 8x8 matrices with e_i^2 = -I, pairwise anticommuting."""
    return [e.copy() for e in _generators()]


@lru_cache(maxsize=1)
def cl06_blades() -> Dict[Blade, np.ndarray]:
    return blade_table(_generators())


def _commutation_sign(a: Blade, b: Blade) -> int:
    """e_A e_B = sign * e_B e_A."""
    return -1 if (len(a) * len(b) - len(set(a) & set(b))) % 2 else 1


@dataclass
class CliffordMultivector06:
    """Real coefficients p_J indexed by increasing index tuples J of {1..6}."""

    coefficients: Dict[Blade, float] = field(default_factory=dict)

    @classmethod
    def from_mapping(cls, values: Mapping) -> "CliffordMultivector06":
        """Keys may be tuples, "e12" labels or single ints."""
        coefficients: Dict[Blade, float] = {}
        for key, value in values.items():
            blade = parse_blade(key)
            if any(i < 1 or i > 6 for i in blade):
                raise ValueError(f"blade {key!r} uses an index outside 1..6")
            coefficients[blade] = coefficients.get(blade, 0.0) + float(value)
        return cls(coefficients)

    def grades(self) -> List[int]:
        return sorted({len(blade) for blade, value in self.coefficients.items() if value})

    def norm2(self) -> float:
        return float(sum(value * value for value in self.coefficients.values()))

    def support(self) -> List[Blade]:
        return [blade for blade, value in self.coefficients.items() if value]

    def all_anticommute(self) -> bool:
        support = self.support()
        return all(
            _commutation_sign(a, b) == -1
            for i, a in enumerate(support)
            for b in support[i + 1:]
        )

    def to_dict(self) -> Dict[str, float]:
        return {blade_label(blade): value for blade, value in sorted(self.coefficients.items()) if value}


def cl06_build(coeffs: CliffordMultivector06) -> np.ndarray:
    """
    Antisymmetric 8x8 matrix sum p_J e_J.

    Raises:
        UnsupportedGrade: If a nonzero coefficient sits outside grades 1, 2, 5, 6
    """
    bad = [blade for blade in coeffs.support() if len(blade) not in ANTISYMMETRIC_GRADES]
    if bad:
        labels = ", ".join(blade_label(blade) for blade in bad)
        raise UnsupportedGrade(f"coefficients outside grades 1, 2, 5, 6: {labels}")
    return compose(coeffs.coefficients, cl06_blades())


def cl06_decompose(matrix: np.ndarray, tol: float = 1e-12) -> CliffordMultivector06:
    """All 64 blade coefficients of an 8x8 matrix; entries below tol are dropped."""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (8, 8):
        raise ValueError(f"expected an 8x8 matrix, got shape {matrix.shape}")
    scale = max(1.0, float(np.max(np.abs(matrix))))
    coefficients = {
        blade: value
        for blade, value in decompose(matrix, cl06_blades()).items()
        if abs(value) > tol * scale
    }
    return CliffordMultivector06(coefficients)


def cl06_quadratic_check(
    coeffs: CliffordMultivector06, tol: float = QUADRATIC_TOL
) -> Optional[Polynomial]:
    """
    x^2 - c when X^2 = cI, else None.

    For antisymmetric X the scalar c is -lambda^2 <= 0; when every summand
    anticommutes with the others lambda^2 is the sum of squared coefficients.
    """
    matrix = cl06_build(coeffs)
    if not np.any(matrix):
        return Polynomial.monomial(1)
    square = matrix @ matrix
    c = float(np.trace(square)) / 8.0
    residual = float(np.max(np.abs(square - c * np.eye(8))))
    scale = max(1.0, float(np.max(np.abs(square))))
    if residual > tol * scale:
        logger.debug(f"X^2 is not scalar (residual {residual:.3e})")
        return None
    if coeffs.all_anticommute() and abs(c + coeffs.norm2()) > tol * scale:
        logger.warning(f"X^2 = {c:.6g} I but the coefficient norm is {coeffs.norm2():.6g}")
    return Polynomial((-c, 0.0, 1.0))
