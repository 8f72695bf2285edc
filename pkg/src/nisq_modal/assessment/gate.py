"""Three-stage gate deciding whether a bottleneck is worth a quantum attempt.

The stages run strictly in order and stop at the first failure:

* suitability: is the problem large enough (system size or number of
  simulation steps) and is there a fitting algorithm (hermitian matrix)?
* classical alternative: has the caller declared the workload
  embarrassingly parallel, in which case classical scaling is preferred?
* feasibility: does the encoding circuit fit the device's qubits and the
  gate budget implied by its EPLG?
"""

from typing import List, Optional, Tuple

from ..analytics.estimator import eigendecompose
from ..config import DEFAULTS
from ..exceptions import InsufficientDataError
from ..logging_config import get_logger
from ..models.dynamical_matrix import assemble_dynamical_matrix, pad_to_qubit_dimension
from ..models.oscillators import OscillatorSystem
from ..quantum.circuit import gate_count, synthesize_encoding
from ..types import AssessmentReport, DeviceSpec, ProblemProfile, StageResult
from ..utils.validation import is_hermitian
from .hardware import gate_budget, quantum_volume_width

logger = get_logger(__name__)

NOT_EVALUATED = StageResult(passed=None, reasons=["not evaluated"])


def profile_from_system(system: OscillatorSystem, n_steps: int, parallel: bool = False) -> ProblemProfile:
    """Derive a problem profile from an oscillator system.

    The encoding gate count is that of the maximum-eigenvalue eigenvector
    of the padded dynamical matrix.
    """
    dynamical = assemble_dynamical_matrix(system)
    padded, n_qubits = pad_to_qubit_dimension(dynamical)
    _, vector = eigendecompose(padded)[-1]
    return ProblemProfile(
        system_size=system.n_osc,
        n_steps=n_steps,
        matrix_hermitian=is_hermitian(dynamical.values),
        required_qubits=n_qubits,
        encoding_gate_count=gate_count(synthesize_encoding(vector)),
        parallel=parallel,
    )


def assess_suitability(
    profile: ProblemProfile,
    min_size: int = DEFAULTS.suitability_min_size,
    min_steps: int = DEFAULTS.suitability_min_steps,
) -> Tuple[bool, List[str]]:
    """Return whether either indicator reaches its threshold, with reasons."""
    reasons = []
    if profile.system_size >= min_size:
        reasons.append(f"system size {profile.system_size} >= {min_size}")
    if profile.n_steps >= min_steps:
        reasons.append(f"step count {profile.n_steps} >= {min_steps}")
    if reasons:
        return True, reasons
    return False, [
        f"system size {profile.system_size} < {min_size} and step count {profile.n_steps} < {min_steps}"
    ]


def assess_feasibility(
    profile: ProblemProfile,
    device: DeviceSpec,
    fidelity_floor: float = DEFAULTS.fidelity_floor,
) -> Tuple[bool, Optional[int], List[str]]:
    """Check qubits, then the encoding gate count against the gate budget.

    Returns
    -------
    tuple of (bool, int or None, list of str)
        The verdict, the gate budget (None when the qubit check already
        failed on a device without EPLG) and the reasons.

    Raises
    ------
    InsufficientDataError
        If the qubits fit but the device has no EPLG figure.
    """
    reasons = []
    budget = None if device.eplg_100q is None else gate_budget(device.eplg_100q, fidelity_floor)
    if profile.required_qubits > device.qubits:
        reasons.append(f"needs {profile.required_qubits} qubits, {device.name} has {device.qubits}")
        return False, budget, reasons
    reasons.append(f"{profile.required_qubits} qubits fit on {device.name} ({device.qubits})")

    if budget is None:
        raise InsufficientDataError(f"{device.name} publishes no EPLG; the gate budget cannot be derived")

    feasible = profile.encoding_gate_count <= budget
    relation = "<=" if feasible else ">"
    reasons.append(
        f"encoding gates {profile.encoding_gate_count} {relation} gate budget {budget} "
        f"(EPLG {device.eplg_100q:g}, fidelity floor {fidelity_floor:g})"
    )
    if device.qv is not None:
        reasons.append(f"note: quantum volume {device.qv} corresponds to width {quantum_volume_width(device.qv):g}")
    return feasible, budget, reasons


def run_gate(
    profile: ProblemProfile,
    device: DeviceSpec,
    min_size: int = DEFAULTS.suitability_min_size,
    min_steps: int = DEFAULTS.suitability_min_steps,
    fidelity_floor: float = DEFAULTS.fidelity_floor,
) -> AssessmentReport:
    """Run the suitability, classical-alternative and feasibility stages in order."""
    suitable, reasons = assess_suitability(profile, min_size, min_steps)
    if not profile.matrix_hermitian:
        suitable = False
        reasons = reasons + ["no fitting algorithm: the matrix is not hermitian"]
    suitability = StageResult(passed=suitable, reasons=reasons)
    if not suitable:
        logger.info(f"Assessment stopped at suitability: {'; '.join(reasons)}")
        return AssessmentReport(suitability, NOT_EVALUATED, NOT_EVALUATED, device)

    if profile.parallel:
        alternative = StageResult(passed=True, reasons=["workload declared embarrassingly parallel"])
        logger.info("Assessment stopped: classical parallelization preferred")
        return AssessmentReport(suitability, alternative, NOT_EVALUATED, device)
    alternative = StageResult(passed=False, reasons=["no classical parallelization declared"])

    feasible, budget, reasons = assess_feasibility(profile, device, fidelity_floor)
    for label, clops in (("CLOPS_v", device.clops_v), ("CLOPS_h", device.clops_h)):
        if clops is not None:
            reasons.append(f"note: {label} {clops}")
    return AssessmentReport(
        suitability, alternative, StageResult(passed=feasible, reasons=reasons), device, gate_budget=budget
    )
