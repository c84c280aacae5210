"""Blade tables shared by the Cl(2,2) and Cl(0,6) matrix realizations."""

import logging
from itertools import combinations
from typing import Dict, Sequence, Tuple

import numpy as np

from ..errors import ConsistencyViolation

logger = logging.getLogger(__name__)

Blade = Tuple[int, ...]


def reversion_sign(grade: int) -> int:
    return -1 if (grade * (grade - 1) // 2) % 2 else 1


def conjugation_sign(grade: int) -> int:
    return -1 if (grade * (grade + 1) // 2) % 2 else 1


def validate_generators(generators: Sequence[np.ndarray], squares: Sequence[int]) -> None:
    """
    Check e_i^2 = squares[i] I and e_i e_j = -e_j e_i for i != j.

    Raises:
        ConsistencyViolation: If a relation fails
    """
    n = generators[0].shape[0]
    identity = np.eye(n)
    for i, (e, square) in enumerate(zip(generators, squares), start=1):
        if not np.allclose(e @ e, square * identity, atol=1e-12):
            raise ConsistencyViolation(f"e{i}^2 != {square:+d} I")
    for (i, a), (j, b) in combinations(enumerate(generators, start=1), 2):
        if not np.allclose(a @ b + b @ a, 0.0, atol=1e-12):
            raise ConsistencyViolation(f"e{i} and e{j} do not anticommute")


def blade_table(generators: Sequence[np.ndarray]) -> Dict[Blade, np.ndarray]:
    """
    All ordered generator products e_J, J increasing, keyed by 1-based index tuples.

    The empty tuple maps to the identity. Entries are read-only.
    """
    n = generators[0].shape[0]
    table: Dict[Blade, np.ndarray] = {}
    for grade in range(len(generators) + 1):
        for blade in combinations(range(1, len(generators) + 1), grade):
            product = np.eye(n)
            for index in blade:
                product = product @ generators[index - 1]
            product = np.rint(product)
            product.setflags(write=False)
            table[blade] = product
    return table


def decompose(matrix: np.ndarray, table: Dict[Blade, np.ndarray]) -> Dict[Blade, float]:
    """Blade coefficients by trace projection (every blade satisfies B^T B = I)."""
    matrix = np.asarray(matrix, dtype=float)
    n = matrix.shape[0]
    return {blade: float(np.sum(b * matrix)) / n for blade, b in table.items()}


def compose(coefficients: Dict[Blade, float], table: Dict[Blade, np.ndarray]) -> np.ndarray:
    n = next(iter(table.values())).shape[0]
    result = np.zeros((n, n))
    for blade, value in coefficients.items():
        if value:
            result += value * table[blade]
    return result


def blade_label(blade: Blade) -> str:
    """e12 style label; the empty blade is "1"."""
    return "e" + "".join(str(i) for i in blade) if blade else "1"


def parse_blade(label) -> Blade:
    """Accept (1, 2), "e12" or 3 and return the index tuple; "1" is the scalar blade."""
    if isinstance(label, int):
        return (label,)
    if isinstance(label, str):
        if label in ("", "1"):
            return ()
        if not label.startswith("e"):
            raise ValueError(f"invalid blade label '{label}'")
        try:
            indices = tuple(int(ch) for ch in label[1:])
        except ValueError:
            raise ValueError(f"invalid blade label '{label}'")
    else:
        indices = tuple(int(i) for i in label)
    if list(indices) != sorted(set(indices)):
        raise ValueError(f"blade {label!r} must list distinct indices in increasing order")
    return indices
