"""Monic real polynomials with ascending coefficients, built on numpy.polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Iterable, List, Optional, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

COEFF_TOL = 1e-10


def _trim(coeffs: np.ndarray, tol: float) -> np.ndarray:
    """Drop leading (highest-degree) coefficients that are negligible."""
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.size == 0:
        return np.zeros(1)
    scale = max(1.0, float(np.max(np.abs(coeffs))))
    last = coeffs.size - 1
    while last > 0 and abs(coeffs[last]) <= tol * scale:
        last -= 1
    return coeffs[: last + 1]


@dataclass(frozen=True, eq=False)
class Polynomial:
    """
    Monic real polynomial.

    Attributes:
        coeffs: Ascending coefficients, coeffs[-1] == 1
    """

    coeffs: tuple

    def __post_init__(self):
        values = tuple(float(c) for c in self.coeffs)
        if not values:
            raise ValueError("polynomial needs at least one coefficient")
        if values[-1] != 1.0:
            raise ValueError(f"polynomial is not monic (leading coefficient {values[-1]})")
        # Normalize -0.0 so reports never print it.
        object.__setattr__(self, "coeffs", tuple(c + 0.0 for c in values))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[float], tol: float = COEFF_TOL) -> "Polynomial":
        """Trim negligible leading terms and rescale to monic."""
        trimmed = _trim(np.asarray(list(coeffs), dtype=float), tol)
        lead = trimmed[-1]
        if lead == 0.0:
            raise ValueError("cannot normalize the zero polynomial")
        monic = trimmed / lead
        monic[-1] = 1.0
        return cls(tuple(monic))

    @classmethod
    def from_roots(cls, roots: Sequence[complex]) -> "Polynomial":
        coeffs = P.polyfromroots(roots)
        return cls.from_coeffs(np.real_if_close(coeffs).real, tol=0.0)

    @classmethod
    def monomial(cls, degree: int) -> "Polynomial":
        """x^degree."""
        return cls(tuple([0.0] * degree + [1.0]))

    @classmethod
    def linear(cls, root: float) -> "Polynomial":
        """x - root."""
        return cls((-float(root), 1.0))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant(self) -> float:
        return self.coeffs[0]

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=float)

    def to_list(self) -> List[float]:
        return list(self.coeffs)

    def __call__(self, x):
        return P.polyval(x, self.as_array())

    def evaluate_matrix(self, matrix: np.ndarray) -> np.ndarray:
        """Horner evaluation p(M)."""
        matrix = np.asarray(matrix, dtype=float)
        identity = np.eye(matrix.shape[0])
        result = np.zeros_like(matrix)
        for c in reversed(self.coeffs):
            result = result @ matrix + c * identity
        return result

    def residual(self, matrix: np.ndarray) -> float:
        """Frobenius norm of p(M)."""
        return float(np.linalg.norm(self.evaluate_matrix(matrix)))

    def roots(self) -> np.ndarray:
        return P.polyroots(self.as_array())

    def compose_shift(self, shift: float) -> "Polynomial":
        """
        Polynomial q with q(x) = p(x - shift).

        Args:
            shift: Translation applied to the argument

        Returns:
            Monic polynomial of the same degree
        """
        result = np.zeros(1)
        base = np.array([-float(shift), 1.0])
        for c in reversed(self.coeffs):
            result = P.polyadd(P.polymul(result, base), [c])
        result = np.asarray(result, dtype=float)
        result[-1] = 1.0
        return Polynomial(tuple(result))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        product = P.polymul(self.as_array(), other.as_array())
        product[-1] = 1.0
        return Polynomial(tuple(product))

    def allclose(self, other: "Polynomial", atol: float = 1e-7) -> bool:
        """Same degree and coefficients within atol elementwise."""
        if self.degree != other.degree:
            return False
        return bool(np.allclose(self.as_array(), other.as_array(), rtol=0.0, atol=atol))

    def max_difference(self, other: "Polynomial") -> float:
        """Largest coefficient gap; infinite when the degrees differ."""
        if self.degree != other.degree:
            return float("inf")
        return float(np.max(np.abs(self.as_array() - other.as_array())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


def format_polynomial(coeffs: Sequence[float], digits: int = 6) -> str:
    """Human-readable form, highest degree first, e.g. 'x^3 - 4x'."""
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = float(coeffs[power])
        if c == 0.0:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if power == 0:
            body = f"{magnitude:.{digits}g}"
        else:
            number = "" if magnitude == 1.0 else f"{magnitude:.{digits}g}"
            body = f"{number}x" if power == 1 else f"{number}x^{power}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    text = f"-{first_body}" if first_sign == "-" else first_body
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


def reverse_poly(poly) -> List[float]:
    """
    Reverse of a polynomial: coefficient i of the result is coefficient n-i.

    Args:
        poly: Polynomial or ascending coefficient sequence

    Returns:
        Ascending coefficients of the reverse (not necessarily monic)
    """
    coeffs = poly.coeffs if isinstance(poly, Polynomial) else tuple(poly)
    return [float(c) for c in reversed(coeffs)]


class ShortlistKind(Enum):
    """Structural screens on candidate minimal polynomials."""

    SIMILAR_TO_MINUS = "similar-to-minus"
    SIMILAR_TO_INVERSE_TRANSPOSE = "similar-to-inverse-transpose"


@dataclass(frozen=True)
class ScreenResult:
    passed: bool
    clause: str = ""

    def __bool__(self) -> bool:
        return self.passed


def screen_shortlist(
    poly: Polynomial, kind: ShortlistKind, tol: float = COEFF_TOL
) -> ScreenResult:
    """
    Check the structural constraints a minimal polynomial must satisfy.

    A matrix similar to its negative has an even or odd minimal polynomial.
    A matrix similar to its inverse transpose has constant term +1 or -1 and
    equals plus or minus its own reverse.

    Args:
        poly: Candidate minimal polynomial
        kind: Which screen to apply
        tol: Coefficient tolerance

    Returns:
        ScreenResult naming the violated clause on failure
    """
    coeffs = poly.as_array()
    if kind is ShortlistKind.SIMILAR_TO_MINUS:
        wrong_parity = coeffs[(poly.degree + 1) % 2 :: 2]
        if np.any(np.abs(wrong_parity) > tol):
            parity = "even" if poly.degree % 2 == 0 else "odd"
            return ScreenResult(False, f"degree-{poly.degree} polynomial is not {parity}")
        return ScreenResult(True)

    if kind is ShortlistKind.SIMILAR_TO_INVERSE_TRANSPOSE:
        constant = coeffs[0]
        if abs(abs(constant) - 1.0) > tol:
            return ScreenResult(False, f"constant term {constant:g} is not +1 or -1")
        sign = 1.0 if constant > 0 else -1.0
        reverse = np.array(reverse_poly(poly))
        if np.any(np.abs(coeffs - sign * reverse) > tol):
            relation = "its reverse" if sign > 0 else "minus its reverse"
            return ScreenResult(False, f"polynomial does not equal {relation}")
        return ScreenResult(True)

    raise ValueError(f"Unknown screen: {kind}")


def _divmod(a: np.ndarray, b: np.ndarray):
    quotient, remainder = P.polydiv(a, b)
    return np.atleast_1d(quotient), np.atleast_1d(remainder)


def poly_gcd(a: Polynomial, b: Polynomial, tol: float = COEFF_TOL) -> Polynomial:
    """Monic gcd by the Euclidean algorithm with remainder trimming."""
    x, y = a.as_array(), b.as_array()
    if x.size < y.size:
        x, y = y, x
    while True:
        _, remainder = _divmod(x, y)
        scale = max(1.0, float(np.max(np.abs(x))))
        if np.all(np.abs(remainder) <= tol * scale):
            return Polynomial.from_coeffs(y, tol)
        x, y = y, _trim(remainder, tol * scale)


def poly_lcm(a: Polynomial, b: Polynomial, tol: float = COEFF_TOL) -> Polynomial:
    """Monic lcm = a*b / gcd(a, b)."""
    divisor = poly_gcd(a, b, tol)
    quotient, _ = _divmod(P.polymul(a.as_array(), b.as_array()), divisor.as_array())
    return Polynomial.from_coeffs(quotient, tol)


def minpoly_block_diagonal(
    polys: Sequence[Polynomial], tol: Optional[float] = None
) -> Polynomial:
    """
    Minimal polynomial of a block-diagonal matrix from its blocks' minimal polynomials.

    Args:
        polys: Minimal polynomial of each diagonal block
        tol: Coefficient tolerance for the gcd degree decisions

    Returns:
        Least common multiple of the inputs
    """
    if not polys:
        raise ValueError("need at least one block polynomial")
    tol = COEFF_TOL if tol is None else tol
    return reduce(lambda left, right: poly_lcm(left, right, tol), polys)
