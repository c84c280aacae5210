"""Analysis orchestrator: detection, closed forms, oracle cross-checks, applications."""

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import linalg

from .. import __version__
from ..applications.cayley import cayley_skew_hamiltonian, cayley_transform_direct
from ..applications.jordan import jordan_skew_hamiltonian
from ..applications.svd3 import svd3_analysis
from ..clifford.cl06 import cl06_decompose, cl06_quadratic_check
from ..clifford.cl22 import cl22_classify
from ..clifford.octonion import (
    Octonion,
    octonion_minpoly,
    octonion_mul,
    omega,
    omega_product_annihilator,
    theta,
    theta_product_annihilator,
)
from ..errors import MatrixParseError, MinpolyError, NotInFamily, RankDecisionAmbiguous
from ..families.detect import detect_families, extract_params
from ..families.params import FamilyTag, SymmetricParams
from ..minpoly.closed_form import closed_form
from ..minpoly.oracle import MAX_DIMENSION, characteristic_polynomial, minimal_polynomial_oracle
from ..minpoly.polynomial import (
    Polynomial,
    ShortlistKind,
    minpoly_block_diagonal,
    screen_shortlist,
)
from ..utils.config_validator import TOLERANCE_KEYS
from ..utils.settings import DEFAULT_SETTINGS
from .models import (
    AnalysisReport,
    ClosedFormSection,
    FamilyAnalysis,
    InputEcho,
    OracleVerdict,
    ParityScreen,
    Tolerances,
)

AUTO = "auto"

PARITY_SCREENS = {
    FamilyTag.SKEW_SYMMETRIC: ShortlistKind.SIMILAR_TO_MINUS,
    FamilyTag.HAMILTONIAN: ShortlistKind.SIMILAR_TO_MINUS,
    FamilyTag.PERSKEW: ShortlistKind.SIMILAR_TO_MINUS,
    FamilyTag.SO4: ShortlistKind.SIMILAR_TO_INVERSE_TRANSPOSE,
}


def _require_shape(matrix: np.ndarray, n: int, mode: str) -> None:
    if matrix.shape != (n, n):
        raise MatrixParseError(
            f"{mode} mode needs a {n}x{n} matrix, got {matrix.shape[0]}x{matrix.shape[1]}"
        )


class MatrixAnalyzer:
    """Builds an AnalysisReport for one input in one of the five modes."""

    def __init__(self, settings: Optional[Dict[str, Any]] = None):
        """
        Initialize the analyzer.

        Args:
            settings: Settings dictionary; its "analysis" section supplies tolerances
        """
        self.settings = settings or DEFAULT_SETTINGS
        analysis = self.settings.get("analysis", {})
        defaults = DEFAULT_SETTINGS["analysis"]
        self.tolerances = Tolerances(
            **{key: float(analysis.get(key, defaults[key])) for key in TOLERANCE_KEYS}
        )
        self.logger = logging.getLogger(self.__class__.__name__)
        self.warnings: List[str] = []

    def _warn(self, message: str) -> None:
        self.logger.warning(message)
        self.warnings.append(message)

    def _report(self, source: str, dimension: int, mode: str, **sections) -> AnalysisReport:
        report = AnalysisReport(
            version=__version__,
            input=InputEcho(source=source, dimension=dimension, mode=mode),
            tolerances=self.tolerances,
            warnings=list(self.warnings),
            **sections,
        )
        self.warnings = []
        return report

    def oracle(self, matrix: np.ndarray) -> Optional[Polynomial]:
        """Gram-oracle minimal polynomial, or None when the rank decision is ambiguous."""
        try:
            return minimal_polynomial_oracle(matrix, self.tolerances.oracle_tol)
        except RankDecisionAmbiguous as e:
            self._warn(f"Oracle undecided: {e}")
            return None

    def verify(
        self, poly: Polynomial, matrix: np.ndarray, oracle_poly: Optional[Polynomial], label: str
    ) -> OracleVerdict:
        """
        Compare a closed-form polynomial with the oracle's.

        Args:
            poly: Closed-form polynomial
            matrix: The matrix it should annihilate
            oracle_poly: Oracle result for the same matrix (None if undecided)
            label: Name used in log messages

        Returns:
            OracleVerdict
        """
        residual = poly.residual(matrix)
        if oracle_poly is None:
            return OracleVerdict(verdict="undecided", residual=residual, message="oracle undecided")

        agreement = self.tolerances.agreement_tol
        if poly.degree == oracle_poly.degree:
            difference = poly.max_difference(oracle_poly)
            verdict = "match" if difference <= agreement else "mismatch"
            result = OracleVerdict(
                polynomial=oracle_poly.to_list(),
                verdict=verdict,
                max_difference=difference,
                residual=residual,
            )
        elif poly.degree > oracle_poly.degree:
            _, remainder = P.polydiv(poly.as_array(), oracle_poly.as_array())
            divides = bool(np.all(np.abs(remainder) <= agreement))
            result = OracleVerdict(
                polynomial=oracle_poly.to_list(),
                verdict="annihilates" if divides else "mismatch",
                residual=residual,
                message=f"oracle degree {oracle_poly.degree} < closed-form degree {poly.degree}",
            )
        else:
            result = OracleVerdict(
                polynomial=oracle_poly.to_list(),
                verdict="mismatch",
                residual=residual,
                message=f"oracle degree {oracle_poly.degree} > closed-form degree {poly.degree}",
            )

        if result.verdict == "mismatch":
            self._warn(f"{label}: closed form {poly} disagrees with oracle {oracle_poly}")
        else:
            self.logger.info(f"{label}: oracle verdict {result.verdict}")
        return result

    def _section(
        self,
        label: str,
        poly: Polynomial,
        matrix: np.ndarray,
        oracle_poly: Optional[Polynomial],
        details: Optional[Dict[str, Any]] = None,
    ) -> ClosedFormSection:
        return ClosedFormSection(
            label=label,
            minimal_polynomial=poly.to_list(),
            polynomial_text=str(poly),
            details=details or {},
            oracle=self.verify(poly, matrix, oracle_poly, label),
        )

    def _family_analysis(
        self, matrix: np.ndarray, tag: FamilyTag, oracle_poly: Optional[Polynomial]
    ) -> FamilyAnalysis:
        params = extract_params(matrix, tag, self.tolerances.membership_tol)
        poly, branch = closed_form(params, self.tolerances.branch_tol)
        screen = None
        if tag in PARITY_SCREENS:
            kind = PARITY_SCREENS[tag]
            result = screen_shortlist(poly, kind)
            screen = ParityScreen(kind=kind.value, passed=result.passed, clause=result.clause)
            if not result.passed:
                self._warn(f"{tag.display_name}: parity screen failed: {result.clause}")
        return FamilyAnalysis(
            family=tag.display_name,
            tag=tag.value,
            params=params.to_dict(),
            minimal_polynomial=poly.to_list(),
            polynomial_text=str(poly),
            branch=branch.branch,
            margins={name: float(value) for name, value in branch.margins.items()},
            quantities=branch.quantities,
            printed=branch.printed,
            note=branch.note,
            screen=screen,
            oracle=self.verify(poly, matrix, oracle_poly, tag.display_name),
        )

    def analyze(
        self,
        matrix: np.ndarray,
        source: str = "<memory>",
        family: str = AUTO,
        jordan: bool = False,
        cayley: bool = False,
    ) -> AnalysisReport:
        """
        Analyze a 4x4 matrix.

        Args:
            matrix: 4x4 real matrix
            source: Input description echoed in the report
            family: "auto" or a family tag value
            jordan: Add the skew-Hamiltonian Jordan section
            cayley: Add the skew-Hamiltonian Cayley section

        Returns:
            AnalysisReport (detected_families is empty when nothing matched)

        Raises:
            NotInFamily: If an explicitly requested family (or the skew-Hamiltonian
                family for --jordan/--cayley) does not contain the matrix
        """
        matrix = np.asarray(matrix, dtype=float)
        _require_shape(matrix, 4, "structured")
        tol = self.tolerances.membership_tol

        detected = FamilyTag.ordered(detect_families(matrix, tol))
        self.logger.info(f"Detected families: {[tag.display_name for tag in detected] or 'none'}")
        oracle_poly = self.oracle(matrix)

        families = []
        if family == AUTO:
            for tag in detected:
                try:
                    families.append(self._family_analysis(matrix, tag, oracle_poly))
                except MinpolyError as e:
                    self._warn(f"{tag.display_name}: {e}")
        else:
            families.append(self._family_analysis(matrix, FamilyTag(family), oracle_poly))

        cl22 = cl22_classify(matrix, tol)
        cl22_section = cl22.to_dict()
        if cl22.minimal_polynomial is not None:
            cl22_section["oracle"] = self.verify(
                cl22.minimal_polynomial, matrix, oracle_poly, "Cl(2,2) class"
            ).model_dump()

        sections: Dict[str, Any] = {}
        if jordan:
            sections["jordan"] = self._jordan(matrix)
        if cayley:
            sections["cayley"] = self._cayley(matrix)

        return self._report(
            source,
            4,
            "structured",
            detected_families=[tag.display_name for tag in detected],
            families=families,
            oracle_polynomial=oracle_poly.to_list() if oracle_poly else None,
            cl22=cl22_section,
            **sections,
        )

    def _skew_hamiltonian(self, matrix: np.ndarray):
        return extract_params(matrix, FamilyTag.SKEW_HAMILTONIAN, self.tolerances.membership_tol)

    def _jordan(self, matrix: np.ndarray) -> Dict[str, Any]:
        params = self._skew_hamiltonian(matrix)
        report = jordan_skew_hamiltonian(
            params.b, params.p, params.c, params.d, self.tolerances.branch_tol
        )
        section = report.to_dict()
        reference = characteristic_polynomial(matrix)
        section["characteristic_difference"] = report.characteristic.max_difference(reference)
        section["notes"] = list(report.notes)
        return section

    def _cayley(self, matrix: np.ndarray) -> Dict[str, Any]:
        params = self._skew_hamiltonian(matrix)
        coefficients, transform = cayley_skew_hamiltonian(params.b, params.p, params.c, params.d)
        direct = cayley_transform_direct(params.matrix())
        return {
            **coefficients.to_dict(),
            "transform": transform.tolist(),
            "direct_difference": float(np.max(np.abs(transform - direct))),
        }

    def analyze_blocks(self, matrix: np.ndarray, source: str = "<memory>") -> AnalysisReport:
        """
        Minimal polynomial of a block-diagonal matrix of 4x4 blocks as the lcm of block closed forms.

        Blocks in no family fall back to the oracle.

        Raises:
            MatrixParseError: If the size is not a multiple of 4 (at most 16)
            NotInFamily: If an off-diagonal block is nonzero
        """
        matrix = np.asarray(matrix, dtype=float)
        n = matrix.shape[0]
        if n % 4 or n > MAX_DIMENSION or matrix.shape != (n, n):
            raise MatrixParseError(
                f"blocks mode needs an n x n matrix with n a multiple of 4 up to {MAX_DIMENSION}"
            )
        tol = self.tolerances.membership_tol
        scale = max(1.0, float(np.max(np.abs(matrix))))
        mask = np.kron(np.eye(n // 4), np.ones((4, 4))) == 0
        if np.any(np.abs(matrix[mask]) > tol * scale):
            raise NotInFamily("matrix is not block diagonal in 4x4 blocks")

        sections: List[ClosedFormSection] = []
        polys: List[Polynomial] = []
        for index in range(n // 4):
            block = matrix[4 * index : 4 * index + 4, 4 * index : 4 * index + 4]
            block_oracle = self.oracle(block)
            poly, details = self._block_polynomial(block, block_oracle)
            if poly is None:
                raise RankDecisionAmbiguous(f"block {index + 1}: no closed form and oracle undecided")
            polys.append(poly)
            sections.append(
                self._section(f"block {index + 1}", poly, block, block_oracle, details)
            )

        lcm = minpoly_block_diagonal(polys)
        sections.append(
            self._section(
                "block-diagonal lcm", lcm, matrix, self.oracle(matrix), {"blocks": n // 4}
            )
        )
        return self._report(source, n, "blocks", closed_forms=sections)

    def _block_polynomial(
        self, block: np.ndarray, block_oracle: Optional[Polynomial]
    ) -> Tuple[Optional[Polynomial], Dict[str, Any]]:
        for tag in FamilyTag.ordered(detect_families(block, self.tolerances.membership_tol)):
            try:
                params = extract_params(block, tag, self.tolerances.membership_tol)
            except MinpolyError as e:
                self.logger.debug(f"{tag.display_name} skipped for block: {e}")
                continue
            poly, branch = closed_form(params, self.tolerances.branch_tol)
            return poly, {"family": tag.display_name, "branch": branch.branch}
        return block_oracle, {"family": None, "branch": "oracle"}

    def analyze_svd3(self, matrix: np.ndarray, source: str = "<memory>") -> AnalysisReport:
        """Singular values of a 3x3 matrix through its 4x4 symmetric image."""
        matrix = np.asarray(matrix, dtype=float)
        _require_shape(matrix, 3, "svd3")
        result = svd3_analysis(matrix, self.tolerances.branch_tol)

        reference = linalg.svd(matrix, compute_uv=False, lapack_driver="gesvd")
        section = result.to_dict()
        section["reference_sigma"] = [float(value) for value in reference]
        section["reference_difference"] = float(
            np.max(np.abs(result.singular.as_array() - reference))
        )

        x = SymmetricParams(0.0, matrix[:, 0], matrix[:, 1], matrix[:, 2]).matrix()
        closed = self._section(
            "symmetric image X",
            result.minimal_polynomial,
            x,
            self.oracle(x),
            {"branch": result.branch.branch},
        )
        return self._report(source, 3, "svd3", svd3=section, closed_forms=[closed])

    def analyze_clifford06(self, matrix: np.ndarray, source: str = "<memory>") -> AnalysisReport:
        """
        Blade decomposition of an antisymmetric 8x8 matrix and its quadratic test.

        Raises:
            NotInFamily: If the matrix is not antisymmetric
        """
        matrix = np.asarray(matrix, dtype=float)
        _require_shape(matrix, 8, "clifford06")
        scale = max(1.0, float(np.max(np.abs(matrix))))
        if np.max(np.abs(matrix + matrix.T)) > self.tolerances.membership_tol * scale:
            raise NotInFamily("clifford06 mode needs an antisymmetric matrix")

        coeffs = cl06_decompose(matrix, self.tolerances.membership_tol)
        quadratic = cl06_quadratic_check(coeffs)
        section = {
            "blades": coeffs.to_dict(),
            "grades": coeffs.grades(),
            "all_anticommute": coeffs.all_anticommute(),
            "coefficient_norm2": coeffs.norm2(),
            "quadratic": quadratic is not None,
        }
        closed_forms = []
        oracle_poly = self.oracle(matrix)
        if quadratic is not None:
            closed_forms.append(self._section("Cl(0,6) quadratic", quadratic, matrix, oracle_poly))
        return self._report(
            source,
            8,
            "clifford06",
            clifford06=section,
            closed_forms=closed_forms,
            oracle_polynomial=oracle_poly.to_list() if oracle_poly else None,
        )

    def analyze_octonion(
        self, a: Octonion, b: Optional[Octonion] = None, source: str = "--octonion"
    ) -> AnalysisReport:
        """
        Quadratic polynomials of omega(a), theta(a), or of omega(a)omega(b) and theta(a)theta(b).
        """
        section: Dict[str, Any] = {"a": a.as_array().tolist()}
        if b is None:
            poly = octonion_minpoly(a)
            left, right = omega(a), theta(a)
            closed_forms = [
                self._section("omega(a)", poly, left, self.oracle(left)),
                self._section("theta(a)", poly, right, self.oracle(right)),
            ]
        else:
            product = octonion_mul(a, b)
            section.update(
                {
                    "b": b.as_array().tolist(),
                    "ab": product.as_array().tolist(),
                    "norm_defect": abs(product.norm() - a.norm() * b.norm()),
                }
            )
            left = omega(a) @ omega(b)
            right = theta(a) @ theta(b)
            closed_forms = [
                self._section(
                    "omega(a) omega(b)",
                    omega_product_annihilator(a, b),
                    left,
                    self.oracle(left),
                ),
                self._section(
                    "theta(a) theta(b)",
                    theta_product_annihilator(a, b),
                    right,
                    self.oracle(right),
                ),
            ]
        return self._report(source, 8, "octonion", octonion=section, closed_forms=closed_forms)


def verdicts_ok(report: AnalysisReport, allowed: Sequence[str] = ("match", "annihilates")) -> bool:
    """True when every closed form in the report was confirmed by the oracle."""
    return all(verdict.verdict in allowed for verdict in report.all_verdicts)
