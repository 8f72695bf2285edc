"""Data types and simple containers used across the toolkit.

The estimator and the assessment gate return several compound values
(expectation estimates, eigenvalue estimates, device rows and assessment
reports).  Small data classes make the shape of these objects explicit.
They hold no heavy logic; they organise results for the CLI and for the
JSON and CSV writers.
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from .exceptions import ArgumentError


@dataclass(frozen=True)
class ExpectationEstimate:
    """Estimate of ``<v|P|v>`` for one Pauli string."""

    value: float  # in [-1, 1]
    shots: int  # 0 in analytic mode
    std_error: float = 0.0


@dataclass(frozen=True)
class EigenEstimate:
    """Result of the hybrid eigenvalue routine for one eigenpair."""

    k: int
    lambda_exact: float  # 1/s²
    lambda_est: float
    omega_est: float  # rad/s
    lambda_mixed: float
    eps_lambda: float
    delta_lambda: float
    rel_error: Optional[float]  # None when the metric is undefined
    gate_count: int
    shots_per_term: int
    total_terms: int
    clamped: bool = False  # negative noisy estimate, omega set to 0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class DeviceSpec:
    """One row of the bundled device registry.  Missing cells are None."""

    name: str
    qubits: int
    qv: Optional[int] = None
    clops_v: Optional[int] = None  # ops/s
    clops_h: Optional[int] = None  # ops/s
    eplg_100q: Optional[float] = None  # fraction

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class ProblemProfile:
    """Indicators describing a simulation bottleneck."""

    system_size: int
    n_steps: int
    matrix_hermitian: bool
    required_qubits: int
    encoding_gate_count: int
    parallel: bool = False  # declared embarrassingly parallel

    def __post_init__(self) -> None:
        for name in ("system_size", "n_steps", "required_qubits"):
            if getattr(self, name) < 1:
                raise ArgumentError(f"{name} must be at least 1, got {getattr(self, name)}")
        if self.encoding_gate_count < 0:
            raise ArgumentError(f"encoding_gate_count must be non-negative, got {self.encoding_gate_count}")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class RequirementChecklist:
    """Informational algorithm requirement checks."""

    algorithm: str
    hermitian: bool
    power_of_two: bool
    unitary: Optional[bool] = None  # QPE only
    notes: List[str] = field(default_factory=list)

    @property
    def satisfied(self) -> bool:
        return self.hermitian and self.power_of_two and self.unitary is not False

    def to_dict(self) -> Dict[str, Any]:
        record = asdict(self)
        record["satisfied"] = self.satisfied
        return record


@dataclass(frozen=True)
class StageResult:
    """Verdict of one stage of the assessment gate.

    ``passed`` is None when the stage was not evaluated.
    """

    passed: Optional[bool]
    reasons: List[str] = field(default_factory=list)

    @property
    def evaluated(self) -> bool:
        return self.passed is not None


@dataclass(frozen=True)
class AssessmentReport:
    """Outcome of the sequential suitability/alternative/feasibility gate."""

    suitability: StageResult
    classical_alternative: StageResult
    feasibility: StageResult
    device: DeviceSpec
    gate_budget: Optional[int] = None

    def __post_init__(self) -> None:
        if self.feasible and not (self.suitable and self.classical_alternative.passed is False):
            raise ArgumentError("a feasible report must be suitable with no preferred classical alternative")

    @property
    def suitable(self) -> bool:
        return bool(self.suitability.passed)

    @property
    def classical_alternative_preferred(self) -> bool:
        return bool(self.classical_alternative.passed)

    @property
    def feasible(self) -> bool:
        return bool(self.feasibility.passed)

    def to_dict(self) -> Dict[str, Any]:
        def stage(result: StageResult) -> Dict[str, Any]:
            return {"evaluated": result.evaluated, "value": result.passed, "reasons": list(result.reasons)}

        return {
            "device": self.device.to_dict(),
            "gate_budget": self.gate_budget,
            "suitable": stage(self.suitability),
            "classical_alternative_preferred": stage(self.classical_alternative),
            "feasible": stage(self.feasibility),
        }


@dataclass(frozen=True)
class SweepRow:
    """Aggregated sweep result for one geometry."""

    geometry: str
    n_osc: int
    n_qubits: int
    gate_count: int
    f: float
    shots: str  # "analytic" or the shot count
    lambda_exact: float
    lambda_mixed: float
    lambda_est_mean: float
    rel_err_mean: float
    rel_err_std: float


if __name__ == "__main__":
    print(ExpectationEstimate(value=1.0, shots=0))
    print(DeviceSpec(name="ibm_torino", qubits=133, clops_h=3800, eplg_100q=0.008))
