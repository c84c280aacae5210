"""
Closed-form minimal polynomials of the six structured families.

Every function returns the polynomial together with a BranchReport naming the
case that fired, the geometric quantities it was decided on and the margin of
each tested condition (positive means the condition held).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from scipy import linalg

from ..algebra.quaternion import PureQuaternion, Quaternion, as_vector
from ..algebra.tensor import TensorElement, product_tensor, tensor_mul
from ..families.detect import extract_params
from ..families.params import (
    FamilyParams,
    FamilyTag,
    HamiltonianParams,
    PerskewParams,
    SkewHamiltonianParams,
    SkewSymmetricParams,
    SpecialOrthogonalParams,
    SymmetricParams,
)
from ..utils.logger import get_context_logger
from .polynomial import Polynomial

logger = logging.getLogger(__name__)

DEFAULT_BRANCH_TOL = 1e-9


@dataclass
class BranchReport:
    """
    Diagnostics for one closed-form evaluation.

    Attributes:
        family: Family whose closed form was applied
        branch: Case identifier, e.g. "quadratic" or "cubic-3"
        quantities: Dot products, cross products and matrices the decision used
        margins: Per condition, tolerance minus measured size (>= 0 means held)
        printed: Coefficients of the printed formula where it differs from the
            shipped one
        note: Free-form remark on corrections
    """

    family: FamilyTag
    branch: str
    quantities: Dict[str, Any] = field(default_factory=dict)
    margins: Dict[str, float] = field(default_factory=dict)
    printed: Optional[List[float]] = None
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family.value,
            "branch": self.branch,
            "quantities": self.quantities,
            "margins": self.margins,
            "printed": self.printed,
            "note": self.note,
        }


def _jsonable(value) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (np.floating, np.integer)):
        return float(value)
    return value


class _ConditionLedger:
    """Records condition tests against a degree-scaled absolute tolerance."""

    def __init__(self, report: BranchReport, branch_tol: float, scale: float):
        self.report = report
        self.branch_tol = branch_tol
        self.scale = max(1.0, scale)

    def limit(self, degree: int) -> float:
        return self.branch_tol * self.scale**degree

    def zero(self, name: str, value, degree: int) -> bool:
        """True when |value| is within tolerance for a degree-homogeneous quantity."""
        size = float(np.linalg.norm(np.atleast_1d(np.asarray(value, dtype=float))))
        margin = self.limit(degree) - size
        self.report.margins[name] = margin
        return margin >= 0.0

    def record(self, **quantities) -> None:
        for name, value in quantities.items():
            self.report.quantities[name] = _jsonable(value)


def _note_printed(
    report: BranchReport, shipped: Polynomial, printed: List[float], reason: str
) -> None:
    printed_arr = np.asarray(printed, dtype=float)
    if printed_arr.shape == shipped.as_array().shape and np.allclose(
        printed_arr, shipped.as_array(), rtol=0.0, atol=1e-12
    ):
        return
    report.printed = [float(c) for c in printed_arr]
    report.note = reason
    log = get_context_logger(__name__, family=report.family.value, branch=report.branch)
    log.warning(f"Printed coefficients {report.printed} corrected to {shipped.to_list()}: {reason}")


def minpoly_skew_symmetric(
    s, t, branch_tol: float = DEFAULT_BRANCH_TOL
) -> Tuple[Polynomial, BranchReport]:
    """
    Minimal polynomial of X = s (x) 1 + 1 (x) t.

    Args:
        s: Pure quaternion of the left factor
        t: Pure quaternion of the right factor
        branch_tol: Condition tolerance

    Returns:
        (polynomial, report)
    """
    s, t = as_vector(s), as_vector(t)
    ss, tt = float(s @ s), float(t @ t)
    lam2 = ss + tt
    l = float(np.sqrt(ss * tt))
    report = BranchReport(FamilyTag.SKEW_SYMMETRIC, "")
    ledger = _ConditionLedger(report, branch_tol, float(np.sqrt(lam2)))
    ledger.record(s_dot_s=ss, t_dot_t=tt, lambda2=lam2, l=l)

    s_zero = ledger.zero("s=0", s, 1)
    t_zero = ledger.zero("t=0", t, 1)
    if s_zero and t_zero:
        report.branch = "zero"
        poly = Polynomial.monomial(1)
    elif s_zero or t_zero:
        report.branch = "quadratic"
        poly = Polynomial((tt if s_zero else ss, 0.0, 1.0))
    elif ledger.zero("s.s=t.t", ss - tt, 2):
        report.branch = "cubic"
        poly = Polynomial((0.0, lam2 + 2.0 * l, 0.0, 1.0))
    else:
        report.branch = "quartic"
        poly = Polynomial(((ss - tt) ** 2, 0.0, 2.0 * lam2, 0.0, 1.0))
    return poly, report


def _hamiltonian_square_part(b: float, p, q, r) -> Tuple[np.ndarray, float, float]:
    v = np.cross(r, q) + b * p
    return v, float(p @ q), float(p @ r)


def _hamiltonian_cubic_case(
    ledger: _ConditionLedger,
    b: float,
    p: np.ndarray,
    q: np.ndarray,
    r: np.ndarray,
    gram: np.ndarray,
    triple: float,
) -> Tuple[str, Optional[float]]:
    """
    Name the listed cubic case whose own hypotheses hold.

    Every condition is evaluated so that its margin lands in the report. The
    printed k of the matched case is returned for comparison, or None when no
    listed case matches.
    """
    pp, qq, rr = float(gram[0, 0]), float(gram[1, 1]), float(gram[2, 2])
    pq, pr, qr = float(gram[0, 1]), float(gram[0, 2]), float(gram[1, 2])

    b_zero = ledger.zero("b = 0", b, 1)
    rxq_zero = ledger.zero("r x q = 0", np.cross(r, q), 2)
    p_zero = ledger.zero("p = 0", p, 1)
    triple_zero = ledger.zero("p.(q x r) = 0", triple, 3)
    pq_zero = ledger.zero("p.q = 0", pq, 2)
    pr_zero = ledger.zero("p.r = 0", pr, 2)
    qr_zero = ledger.zero("q.r = 0", qr, 2)

    k1: Optional[float] = None
    near_inverse = False
    if not b_zero:
        k1 = (triple - b * pp) / b
        y = np.array(
            [
                [b * b + k1, -pq, -pr],
                [-pq, rr - k1, -qr],
                [-pr, -qr, qq - k1],
            ]
        )
        residual = gram @ y - b * triple * np.eye(3)
        ledger.record(Y=y, GY_minus_bTI=residual)
        near_inverse = ledger.zero("cubic-1: GY = b p.(q x r) I", residual, 4)

    k5: Optional[float] = None
    four_equal = False
    if not (pq_zero or pr_zero or qr_zero or rxq_zero):
        k5 = -(pq / qr) * pr
        four = np.array(
            [
                qq + pr * qr / pq,
                rr + pq * qr / pr,
                rr - (pq * pq + qr * qr) / qq,
                qq - (pr * pr + qr * qr) / rr,
            ]
        )
        ledger.record(cubic5_quantities=four)
        four_equal = ledger.zero("cubic-5: quantities = -(q.p)(p.r)/(q.r)", four - k5, 2)

    base = [b_zero, not rxq_zero]
    cases = [
        ("cubic-1", [not b_zero, near_inverse], k1),
        (
            "cubic-2",
            base + [p_zero, qr_zero, ledger.zero("cubic-2: q.q = r.r", qq - rr, 2)],
            rr + qq,
        ),
        (
            "cubic-3",
            base
            + [not p_zero, triple_zero, pq_zero, qr_zero, not pr_zero]
            + [ledger.zero("cubic-3: (r.r)^2 + (p.r)^2 = (q.q)(r.r)", rr * rr + pr * pr - qq * rr, 4)],
            rr,
        ),
        (
            "cubic-4",
            base
            + [not p_zero, pr_zero, qr_zero, not pq_zero]
            + [ledger.zero("cubic-4: (q.q)^2 + (p.q)^2 = (q.q)(r.r)", qq * qq + pq * pq - qq * rr, 4)],
            qq,
        ),
        ("cubic-5", base + [not p_zero, triple_zero, not pq_zero, not pr_zero, four_equal], k5),
    ]
    for name, conditions, printed_k in cases:
        if all(conditions):
            return name, printed_k
    return "cubic-unlisted", None


def minpoly_hamiltonian(
    b: float, p, q, r, branch_tol: float = DEFAULT_BRANCH_TOL
) -> Tuple[Polynomial, BranchReport]:
    """
    Minimal polynomial of H = b (1 (x) j) + p (x) 1 + q (x) i + r (x) k.

    H^2 = omega + 2N with N = v (x) j - (p.q)(1 (x) i) - (p.r)(1 (x) k) and
    v = r x q + b p. H is quadratic iff N = 0, cubic iff NH = (omega/2) H,
    so every cubic is x^3 - 2 omega x.

    Args:
        b: Coefficient of 1 (x) j
        p, q, r: Pure quaternions
        branch_tol: Condition tolerance

    Returns:
        (polynomial, report)
    """
    b = float(b)
    p, q, r = as_vector(p), as_vector(q), as_vector(r)
    params = HamiltonianParams(b, p, q, r)
    omega = -b * b - float(p @ p) + float(q @ q) + float(r @ r)
    v, pq, pr = _hamiltonian_square_part(b, p, q, r)
    triple = float(p @ np.cross(q, r))
    gram = np.column_stack([p, q, r]).T @ np.column_stack([p, q, r])

    report = BranchReport(FamilyTag.HAMILTONIAN, "")
    ledger = _ConditionLedger(report, branch_tol, params.magnitude())
    ledger.record(omega=omega, v=v, p_dot_q=pq, p_dot_r=pr, triple=triple, G=gram)

    if ledger.zero("H=0", params.components(), 1):
        report.branch = "zero"
        return Polynomial.monomial(1), report

    quadratic = [
        ledger.zero("r x q + b p = 0", v, 2),
        ledger.zero("p.q = 0", pq, 2),
        ledger.zero("p.r = 0", pr, 2),
    ]
    if all(quadratic):
        report.branch = "quadratic"
        return Polynomial((-omega, 0.0, 1.0)), report

    k = omega / 2.0
    h = params.tensor()
    n = (
        product_tensor(PureQuaternion.from_array(v), PureQuaternion(0.0, 1.0, 0.0))
        - TensorElement.unit(0, 1, pq)
        - TensorElement.unit(0, 3, pr)
    )
    cubic_residual = tensor_mul(n, h) - h.scaled(k)
    ledger.record(k=k, cubic_residual=cubic_residual.coeffs)

    if ledger.zero("NH = kH", cubic_residual.coeffs, 3):
        poly = Polynomial((0.0, -2.0 * omega, 0.0, 1.0))
        report.branch, printed_k = _hamiltonian_cubic_case(ledger, b, p, q, r, gram, triple)
        ledger.record(printed_k=printed_k)
        if printed_k is None:
            report.note = "no listed cubic case matched; coefficient is 2*omega"
            logger.info(f"Hamiltonian cubic outside the listed cases (omega={omega:.6g})")
        else:
            _note_printed(
                report,
                poly,
                [0.0, -(omega + 2.0 * printed_k), 0.0, 1.0],
                "cubic coefficient is 2*omega (k = omega/2)",
            )
        return poly, report

    report.branch = "quartic"
    constant = omega * omega - 4.0 * (float(v @ v) - pq * pq - pr * pr)
    return Polynomial((constant, 0.0, -2.0 * omega, 0.0, 1.0)), report


def minpoly_perskewsymmetric(
    r, s, alpha: float, beta: float, branch_tol: float = DEFAULT_BRANCH_TOL
) -> Tuple[Polynomial, BranchReport]:
    """
    Minimal polynomial of P = r (x) i + j (x) s + alpha (1 (x) i) + beta (j (x) 1).

    P^2 = lambda^2 + N with N^2 = 4 (r.r - beta^2)(s.s - alpha^2).

    Args:
        r: Pure quaternion in span{i, k}
        s: Pure quaternion in span{j, k}
        alpha, beta: Real coefficients
        branch_tol: Condition tolerance

    Returns:
        (polynomial, report)
    """
    params = PerskewParams(PureQuaternion.from_array(as_vector(r)), PureQuaternion.from_array(as_vector(s)), alpha, beta)
    r_vec, s_vec = params.r.as_vector(), params.s.as_vector()
    alpha, beta = params.alpha, params.beta
    rr, ss = float(r_vec @ r_vec), float(s_vec @ s_vec)
    lam2 = rr + ss - alpha * alpha - beta * beta
    left, right = rr - beta * beta, ss - alpha * alpha

    report = BranchReport(FamilyTag.PERSKEW, "")
    ledger = _ConditionLedger(report, branch_tol, params.magnitude())
    ledger.record(lambda2=lam2, r_dot_r=rr, s_dot_s=ss, N_squared=4.0 * left * right)

    if ledger.zero("P=0", params.components(), 1):
        report.branch = "zero"
        return Polynomial.monomial(1), report

    alpha_zero = ledger.zero("alpha = 0", alpha, 1)
    beta_zero = ledger.zero("beta = 0", beta, 1)
    r_zero = ledger.zero("r = 0", r_vec, 1)
    s_zero = ledger.zero("s = 0", s_vec, 1)
    if alpha_zero and not beta_zero and s_zero:
        report.branch = "quadratic-i"
    elif beta_zero and not alpha_zero and r_zero:
        report.branch = "quadratic-ii"
    elif alpha_zero and beta_zero and (r_zero or s_zero):
        report.branch = "quadratic-iii"
    if report.branch:
        return Polynomial((-lam2, 0.0, 1.0)), report

    if ledger.zero("r.r - beta^2 = s.s - alpha^2", left - right, 2):
        report.branch = "cubic"
        poly = Polynomial((0.0, -2.0 * lam2, 0.0, 1.0))
        _note_printed(
            report,
            poly,
            [0.0, -(lam2 + 2.0 * alpha * alpha - 2.0 * ss), 0.0, 1.0],
            "cubic coefficient is 2*lambda^2",
        )
        return poly, report

    report.branch = "quartic"
    poly = Polynomial((lam2 * lam2 - 4.0 * left * right, 0.0, -2.0 * lam2, 0.0, 1.0))
    printed_constant = -(
        4.0 * beta * ss - 4.0 * alpha * rr + 4.0 * alpha**2 * beta**2 - 4.0 * rr * ss - lam2**2
    )
    _note_printed(
        report,
        poly,
        [printed_constant, 0.0, -2.0 * lam2, 0.0, 1.0],
        "constant term is lambda^4 - 4(r.r - beta^2)(s.s - alpha^2)",
    )
    return poly, report


def minpoly_skew_hamiltonian(b: float, p, c: float, d: float) -> Polynomial:
    """
    Minimal polynomial of W = b + p (x) j + c (1 (x) i) + d (1 (x) k).

    (W - b)^2 = mu^2 with mu^2 = |p|^2 - c^2 - d^2, so a non-scalar W has
    x^2 - 2bx + kappa, kappa = b^2 - mu^2. A scalar W gives x - b.
    """
    params = SkewHamiltonianParams(b, PureQuaternion.from_array(as_vector(p)), c, d)
    if params.theta2 == 0.0:
        return Polynomial.linear(params.b)
    return Polynomial((params.kappa, -2.0 * params.b, 1.0))


def _symmetric_cubic_case(
    p: np.ndarray, q: np.ndarray, r: np.ndarray, ledger: _ConditionLedger
) -> str:
    """
    Split a rank-two cubic by how many of p x q, q x r, r x p vanish.

    cubic-i: two vanish (one column zero, the others orthogonal of equal length).
    cubic-ii: one vanishes (a parallel pair, the third column orthogonal to both).
    cubic-iii: none vanishes (the three alpha expressions agree).
    """
    cyclic = [("p", "q", "r", p, q, r), ("q", "r", "p", q, r, p), ("r", "p", "q", r, p, q)]
    zero_cross = [ledger.zero(f"{x} x {y} = 0", np.cross(u, v), 2) for x, y, _, u, v, _ in cyclic]
    count = sum(zero_cross)

    if count >= 2:
        # count 3 only arises at the rank-one tolerance boundary
        nonzero = int(np.argmax([np.linalg.norm(np.cross(u, v)) for _, _, _, u, v, _ in cyclic]))
        x, y, z, u, v, w = cyclic[nonzero]
        held = [
            ledger.zero(f"cubic-i: {x}.{y} = 0", u @ v, 2),
            ledger.zero(f"cubic-i: {x}.{x} = {y}.{y}", u @ u - v @ v, 2),
            ledger.zero(f"cubic-i: {z} = 0", w, 1),
        ]
        branch = "cubic-i"
    elif count == 1:
        x, y, z, u, v, w = cyclic[zero_cross.index(True)]
        held = [
            ledger.zero(f"cubic-ii: {y}.{z} = 0", v @ w, 2),
            ledger.zero(f"cubic-ii: {z}.{x} = 0", w @ u, 2),
            ledger.zero(f"cubic-ii: {x}.{x} + {y}.{y} = {z}.{z}", u @ u + v @ v - w @ w, 2),
        ]
        branch = "cubic-ii"
    else:
        pp, qq, rr = float(p @ p), float(q @ q), float(r @ r)
        pq, qr, rp = float(p @ q), float(q @ r), float(r @ p)
        half = (pp + qq + rr) / 2.0
        # alpha expressions multiplied through by their denominators
        held = [
            ledger.zero("cubic-iii: r.r - (r.p)(r.q)/(p.q) = alpha", (rr - half) * pq - rp * qr, 4),
            ledger.zero("cubic-iii: q.q - (q.p)(r.q)/(p.r) = alpha", (qq - half) * rp - pq * qr, 4),
            ledger.zero("cubic-iii: p.p - (r.p)(q.p)/(q.r) = alpha", (pp - half) * qr - rp * pq, 4),
        ]
        branch = "cubic-iii"

    if not all(held):
        logger.debug(f"Symmetric {branch} conditions outside tolerance: {ledger.report.margins}")
    return branch


def _symmetric_traceless(
    p: np.ndarray, q: np.ndarray, r: np.ndarray, ledger: _ConditionLedger, report: BranchReport
) -> Polynomial:
    x = np.column_stack([p, q, r])
    lam2 = float(np.sum(x * x))
    qxr, rxp, pxq = np.cross(q, r), np.cross(r, p), np.cross(p, q)
    triple = float(p @ qxr)
    singular = linalg.svdvals(x)
    ledger.record(lambda2=lam2, triple=triple, singular_values=singular)

    if ledger.zero("S=0", x, 1):
        report.branch = "zero"
        return Polynomial.monomial(1)

    if ledger.zero("rank[p,q,r] = 1", singular[1:], 1):
        report.branch = "quadratic-rank-one"
        return Polynomial((-lam2, 0.0, 1.0))

    l = 3.0 * triple / lam2
    ledger.record(l=l)
    l_checks = [
        ledger.zero("p x q = l r", pxq - l * r, 2),
        ledger.zero("q x r = l p", qxr - l * p, 2),
        ledger.zero("r x p = l q", rxp - l * q, 2),
    ]
    if all(l_checks):
        report.branch = "quadratic-l"
        return Polynomial((-lam2, -2.0 * l, 1.0))

    half = lam2 / 2.0
    cubic_checks = [
        ledger.zero("p.(q x r) = 0", triple, 3),
        ledger.zero("(r x p) x r - (p x q) x q = (lambda^2/2) p",
                   np.cross(rxp, r) - np.cross(pxq, q) - half * p, 3),
        ledger.zero("(p x q) x p - (q x r) x r = (lambda^2/2) q",
                   np.cross(pxq, p) - np.cross(qxr, r) - half * q, 3),
        ledger.zero("(q x r) x q - (r x p) x p = (lambda^2/2) r",
                   np.cross(qxr, q) - np.cross(rxp, p) - half * r, 3),
    ]
    if all(cubic_checks):
        report.branch = _symmetric_cubic_case(p, q, r, ledger)
        ledger.record(alpha=half)
        return Polynomial((0.0, -2.0 * lam2, 0.0, 1.0))

    constant = lam2 * lam2 - 4.0 * (float(qxr @ qxr) + float(rxp @ rxp) + float(pxq @ pxq))
    quartic = Polynomial((constant, -8.0 * triple, -2.0 * lam2, 0.0, 1.0))

    # Symmetric matrices are diagonalizable: a repeated eigenvalue lowers the degree.
    matrix = SymmetricParams(0.0, p, q, r).matrix()
    eigenvalues = linalg.eigvalsh(matrix)
    cluster_tol = ledger.limit(1)
    distinct = [eigenvalues[0]]
    for value in eigenvalues[1:]:
        if value - distinct[-1] > cluster_tol:
            distinct.append(value)
    ledger.record(eigenvalues=eigenvalues)
    if len(distinct) < 4:
        report.branch = "cubic-repeated-eigenvalue"
        return Polynomial.from_roots(distinct)

    report.branch = "quartic"
    return quartic


def minpoly_symmetric(
    a: float, p, q, r, branch_tol: float = DEFAULT_BRANCH_TOL
) -> Tuple[Polynomial, BranchReport]:
    """
    Minimal polynomial of S = a + p (x) i + q (x) j + r (x) k.

    The traceless part is classified and the result shifted by a.

    Args:
        a: Scalar part (a quarter of the trace)
        p, q, r: Pure quaternions, the columns of X = [p | q | r]
        branch_tol: Condition tolerance

    Returns:
        (polynomial, report)
    """
    a = float(a)
    p, q, r = as_vector(p), as_vector(q), as_vector(r)
    report = BranchReport(FamilyTag.SYMMETRIC, "")
    scale = float(np.sqrt(p @ p + q @ q + r @ r))
    ledger = _ConditionLedger(report, branch_tol, scale)
    ledger.record(a=a)

    traceless = _symmetric_traceless(p, q, r, ledger, report)
    if a == 0.0:
        return traceless, report
    return traceless.compose_shift(a), report


def minpoly_so4(u, v, branch_tol: float = DEFAULT_BRANCH_TOL) -> Tuple[Polynomial, BranchReport]:
    """
    Minimal polynomial of the rotation x -> u x conj(v).

    Args:
        u, v: Unit quaternions
        branch_tol: Condition tolerance

    Returns:
        (polynomial, report)
    """
    u = u if isinstance(u, Quaternion) else Quaternion.from_array(u)
    v = v if isinstance(v, Quaternion) else Quaternion.from_array(v)
    u0, v0 = u.real, v.real
    u_imag, v_imag = u.imag.as_vector(), v.imag.as_vector()

    report = BranchReport(FamilyTag.SO4, "")
    ledger = _ConditionLedger(report, branch_tol, 1.0)
    ledger.record(u0=u0, v0=v0, u_norm=u.norm(), v_norm=v.norm())

    u_real = ledger.zero("Im u = 0", u_imag, 1)
    v_real = ledger.zero("Im v = 0", v_imag, 1)
    if u_real and v_real:
        report.branch = "scalar"
        return Polynomial.linear(u0 * v0), report

    if ledger.zero("u0 = 0", u0, 1) and ledger.zero("v0 = 0", v0, 1):
        report.branch = "quadratic-involution"
        return Polynomial((-1.0, 0.0, 1.0)), report

    if u_real or v_real:
        report.branch = "quadratic"
        return Polynomial((1.0, -2.0 * u0 * v0, 1.0)), report

    if ledger.zero("u0 = v0", u0 - v0, 1):
        a_coef = 4.0 * u0 * v0 - 1.0
        report.branch = "cubic-plus"
        return Polynomial((-1.0, a_coef, -a_coef, 1.0)), report

    if ledger.zero("u0 = -v0", u0 + v0, 1):
        a_coef = -(1.0 + 4.0 * u0 * v0)
        report.branch = "cubic-minus"
        return Polynomial((1.0, a_coef, a_coef, 1.0)), report

    a_coef = -4.0 * u0 * v0
    b_coef = 4.0 * u0 * u0 + 4.0 * v0 * v0 - 2.0
    report.branch = "quartic"
    return Polynomial((1.0, a_coef, b_coef, a_coef, 1.0)), report


def closed_form(
    params: FamilyParams, branch_tol: float = DEFAULT_BRANCH_TOL
) -> Tuple[Polynomial, BranchReport]:
    """Dispatch a parameter set to its family's closed form."""
    if isinstance(params, SkewSymmetricParams):
        return minpoly_skew_symmetric(params.s, params.t, branch_tol)
    if isinstance(params, HamiltonianParams):
        return minpoly_hamiltonian(params.b, params.p, params.q, params.r, branch_tol)
    if isinstance(params, PerskewParams):
        return minpoly_perskewsymmetric(
            params.r, params.s, params.alpha, params.beta, branch_tol
        )
    if isinstance(params, SymmetricParams):
        return minpoly_symmetric(params.a, params.p, params.q, params.r, branch_tol)
    if isinstance(params, SkewHamiltonianParams):
        poly = minpoly_skew_hamiltonian(params.b, params.p, params.c, params.d)
        report = BranchReport(
            FamilyTag.SKEW_HAMILTONIAN,
            "scalar" if poly.degree == 1 else "quadratic",
            quantities={"mu2": params.mu2, "kappa": params.kappa, "theta2": params.theta2},
        )
        return poly, report
    if isinstance(params, SpecialOrthogonalParams):
        return minpoly_so4(params.u, params.v, branch_tol)
    raise TypeError(f"Unsupported parameter type: {type(params).__name__}")


def minimal_polynomial(
    matrix: np.ndarray,
    tag: FamilyTag,
    branch_tol: float = DEFAULT_BRANCH_TOL,
    membership_tol: Optional[float] = None,
) -> Tuple[Polynomial, BranchReport]:
    """
    Extract a matrix's parameters for one family and apply its closed form.

    Raises:
        NotInFamily: If the matrix is not in the family
    """
    params = extract_params(matrix, tag, membership_tol)
    poly, report = closed_form(params, branch_tol)
    log = get_context_logger(__name__, family=tag.value, branch=report.branch)
    log.info(f"Closed form: {poly}")
    return poly, report
