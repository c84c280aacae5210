"""Report models; field order here is the field order of the emitted JSON."""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Verdict = Literal["match", "mismatch", "annihilates", "undecided"]


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid")


class InputEcho(_Model):
    source: str
    dimension: int
    mode: Literal["structured", "blocks", "svd3", "clifford06", "octonion"]


class Tolerances(_Model):
    membership_tol: float
    branch_tol: float
    oracle_tol: float
    agreement_tol: float


class OracleVerdict(_Model):
    """
    Gram-oracle cross-check of a closed-form polynomial.

    verdict is "match" when both polynomials have the same degree and every
    coefficient agrees within agreement_tol; "annihilates" when the closed
    form is a non-minimal annihilator divisible by the oracle polynomial.
    """

    polynomial: Optional[List[float]] = None
    verdict: Verdict
    max_difference: Optional[float] = None
    residual: float
    message: str = ""


class ParityScreen(_Model):
    kind: str
    passed: bool
    clause: str = ""


class FamilyAnalysis(_Model):
    family: str
    tag: str
    params: Dict[str, Any]
    minimal_polynomial: List[float]
    polynomial_text: str
    branch: str
    margins: Dict[str, float] = Field(default_factory=dict)
    quantities: Dict[str, Any] = Field(default_factory=dict)
    printed: Optional[List[float]] = None
    note: str = ""
    screen: Optional[ParityScreen] = None
    oracle: OracleVerdict


class ClosedFormSection(_Model):
    """A closed-form polynomial outside the six families (blocks, Clifford, octonion)."""

    label: str
    minimal_polynomial: List[float]
    polynomial_text: str
    details: Dict[str, Any] = Field(default_factory=dict)
    oracle: OracleVerdict


class AnalysisReport(_Model):
    version: str
    input: InputEcho
    detected_families: List[str] = Field(default_factory=list)
    families: List[FamilyAnalysis] = Field(default_factory=list)
    oracle_polynomial: Optional[List[float]] = None
    closed_forms: List[ClosedFormSection] = Field(default_factory=list)
    jordan: Optional[Dict[str, Any]] = None
    cayley: Optional[Dict[str, Any]] = None
    svd3: Optional[Dict[str, Any]] = None
    cl22: Optional[Dict[str, Any]] = None
    clifford06: Optional[Dict[str, Any]] = None
    octonion: Optional[Dict[str, Any]] = None
    tolerances: Tolerances
    warnings: List[str] = Field(default_factory=list)

    @property
    def all_verdicts(self) -> List[OracleVerdict]:
        return [entry.oracle for entry in self.families] + [
            entry.oracle for entry in self.closed_forms
        ]
