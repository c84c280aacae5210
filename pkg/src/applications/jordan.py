"""Jordan structure of skew-Hamiltonian matrices."""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.quaternion import PureQuaternion, as_vector
from ..errors import ConsistencyViolation, ScalarInput
from ..families.params import SkewHamiltonianParams
from ..minpoly.polynomial import Polynomial

logger = logging.getLogger(__name__)

DEFAULT_JORDAN_TOL = 1e-9


@dataclass
class EigenvalueBlocks:
    """One eigenvalue with its algebraic multiplicity and Jordan block sizes."""

    value: complex
    algebraic_multiplicity: int
    block_sizes: List[int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": [float(self.value.real), float(self.value.imag)],
            "algebraic_multiplicity": self.algebraic_multiplicity,
            "block_sizes": list(self.block_sizes),
        }


@dataclass
class RankCertificate:
    """rank(W - bI) with a nonvanishing 2x2 principal minor of Y^T Y."""

    rank: int
    minor_index: Tuple[int, int]
    minor_value: float
    gram: np.ndarray

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "minor_index": [self.minor_index[0] + 1, self.minor_index[1] + 1],
            "minor_value": self.minor_value,
        }


@dataclass
class JordanReport:
    """Eigenvalues, Jordan blocks and characteristic polynomial of W."""

    eigenvalues: List[EigenvalueBlocks]
    diagonalizable: bool
    mu2: float
    characteristic: Polynomial
    mu: Optional[float] = None
    rank_certificate: Optional[RankCertificate] = None
    notes: List[str] = field(default_factory=list)

    @property
    def block_sizes(self) -> List[int]:
        return sorted(size for entry in self.eigenvalues for size in entry.block_sizes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "eigenvalues": [entry.to_dict() for entry in self.eigenvalues],
            "diagonalizable": self.diagonalizable,
            "mu2": self.mu2,
            "mu": self.mu,
            "characteristic_polynomial": self.characteristic.to_list(),
            "rank_certificate": (
                self.rank_certificate.to_dict() if self.rank_certificate else None
            ),
        }


def _params(b, p, c, d) -> SkewHamiltonianParams:
    return SkewHamiltonianParams(b, PureQuaternion.from_array(as_vector(p)), c, d)


def skew_hamiltonian_characteristic(b: float, mu2: float) -> Polynomial:
    """x^4 - 4bx^3 + (6b^2 - 2mu^2)x^2 + (4b mu^2 - 4b^3)x + b^4 + mu^4 - 2mu^2 b^2."""
    return Polynomial(
        (
            b**4 + mu2 * mu2 - 2.0 * mu2 * b * b,
            4.0 * b * mu2 - 4.0 * b**3,
            6.0 * b * b - 2.0 * mu2,
            -4.0 * b,
            1.0,
        )
    )


def jordan_block_sizes_from_ranks(ranks: Sequence[int], n: int) -> Dict[int, int]:
    """
    Count Jordan blocks of each size from ranks of powers of (W - lambda I).

    Args:
        ranks: r_1, ..., r_n with r_k = rank (W - lambda I)^k
        n: Matrix dimension (r_0 = n, r_{n+1} = r_n)

    Returns:
        Mapping block size -> number of blocks (sizes with no blocks omitted)
    """
    if len(ranks) != n:
        raise ValueError(f"need {n} ranks, got {len(ranks)}")
    r = [n] + list(ranks) + [ranks[-1]]
    counts = {}
    for i in range(1, n + 1):
        count = r[i - 1] - 2 * r[i] + r[i + 1]
        if count:
            counts[i] = count
    return counts


def _power_ranks(shifted: np.ndarray, tol: float) -> List[int]:
    n = shifted.shape[0]
    scale = max(1.0, float(np.linalg.norm(shifted)))
    ranks, power = [], np.eye(n)
    for k in range(1, n + 1):
        power = power @ shifted
        ranks.append(int(np.linalg.matrix_rank(power, tol=tol * scale**k)))
    return ranks


def verify_rank_two(b: float, p, c: float, d: float, tol: float = DEFAULT_JORDAN_TOL) -> RankCertificate:
    """
    Certify rank(W - bI) = 2 when |p|^2 = c^2 + d^2.

    Y = W - bI; rank Y = rank Y^T Y, and the latter is two as soon as one
    2x2 principal minor is nonzero.

    Args:
        b, p, c, d: Skew-Hamiltonian parameters (mu = 0, non-scalar)
        tol: Relative tolerance for the rank and minor decisions

    Returns:
        RankCertificate naming the largest principal minor

    Raises:
        ScalarInput: If W is scalar
        ConsistencyViolation: If the rank is not two or every minor vanishes
    """
    params = _params(b, p, c, d)
    theta2 = params.theta2
    if theta2 == 0.0:
        raise ScalarInput("W is scalar (|p|^2 + c^2 + d^2 = 0)")

    y = params.matrix() - params.b * np.eye(4)
    gram = y.T @ y
    minors = {
        (i, j): float(gram[i, i] * gram[j, j] - gram[i, j] * gram[j, i])
        for i, j in combinations(range(4), 2)
    }
    index = max(minors, key=lambda key: abs(minors[key]))
    value = minors[index]
    if abs(value) <= tol * theta2 * theta2:
        raise ConsistencyViolation(
            f"all 2x2 principal minors of Y^T Y vanish (largest {value:.3e})"
        )

    rank = int(np.linalg.matrix_rank(y, tol=tol * max(1.0, float(np.sqrt(theta2)))))
    if rank != 2:
        raise ConsistencyViolation(f"rank(W - bI) = {rank}, expected 2")
    logger.debug(f"rank(W - bI) = 2 certified by minor {index} = {value:.6g}")
    return RankCertificate(rank, index, value, gram)


def jordan_skew_hamiltonian(
    b: float, p, c: float, d: float, tol: float = DEFAULT_JORDAN_TOL
) -> JordanReport:
    """
    Jordan structure of W = b + p (x) j + c (1 (x) i) + d (1 (x) k).

    Args:
        b, p, c, d: Skew-Hamiltonian parameters
        tol: Tolerance for mu^2 = 0, scaled by theta^2

    Returns:
        JordanReport

    Raises:
        ScalarInput: If W is scalar
    """
    params = _params(b, p, c, d)
    theta2 = params.theta2
    if theta2 == 0.0:
        raise ScalarInput("W is scalar (|p|^2 + c^2 + d^2 = 0)")

    b, mu2 = params.b, params.mu2
    characteristic = skew_hamiltonian_characteristic(b, mu2)

    if abs(mu2) <= tol * max(1.0, theta2):
        certificate = verify_rank_two(b, params.p, params.c, params.d, tol)
        shifted = params.matrix() - b * np.eye(4)
        blocks = jordan_block_sizes_from_ranks(_power_ranks(shifted, tol), 4)
        if blocks != {2: 2}:
            raise ConsistencyViolation(f"expected two blocks of size 2, found {blocks}")
        return JordanReport(
            eigenvalues=[EigenvalueBlocks(complex(b), 4, [2, 2])],
            diagonalizable=False,
            mu2=0.0,
            mu=0.0,
            characteristic=characteristic,
            rank_certificate=certificate,
        )

    if mu2 > 0:
        mu = float(np.sqrt(mu2))
        eigenvalues = [
            EigenvalueBlocks(complex(b + mu), 2, [1, 1]),
            EigenvalueBlocks(complex(b - mu), 2, [1, 1]),
        ]
        notes = []
    else:
        mu = None
        imag = float(np.sqrt(-mu2))
        eigenvalues = [
            EigenvalueBlocks(complex(b, imag), 2, [1, 1]),
            EigenvalueBlocks(complex(b, -imag), 2, [1, 1]),
        ]
        notes = ["mu^2 < 0: complex pair, diagonalizable over C"]

    return JordanReport(
        eigenvalues=eigenvalues,
        diagonalizable=True,
        mu2=mu2,
        mu=mu,
        characteristic=characteristic,
        notes=notes,
    )
