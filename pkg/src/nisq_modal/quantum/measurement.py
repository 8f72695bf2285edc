"""Pauli expectation values: exact, shot-sampled and noise-damped.

Noise is modelled as a global depolarizing channel acting on the prepared
state.  Every non-identity Pauli expectation is scaled by the circuit
fidelity ``f^G`` where ``G`` is the encoding gate count; the identity
expectation stays 1.  With ``f -> 0`` the state is fully mixed and the
estimated eigenvalue collapses to the identity weight.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from ..config import DEFAULTS, REFERENCE_HARDWARE
from ..exceptions import ArgumentError, ShapeError
from ..logging_config import get_logger
from ..types import ExpectationEstimate
from .circuit import Statevector, apply_circuit, measurement_basis_change
from .pauli import PauliString, parity

logger = get_logger(__name__)

IMAG_TOL = 1e-10


class NoiseMode(str, Enum):
    NOISELESS = "noiseless"
    GLOBAL_DEPOLARIZING = "global_depolarizing"


@dataclass(frozen=True)
class NoiseModel:
    """Global depolarizing noise parameterised by a per-gate fidelity.

    ``two_qubit_fidelity`` optionally gives CNOTs their own fidelity; when
    it is None every gate uses ``gate_fidelity``.
    """

    mode: NoiseMode = NoiseMode.GLOBAL_DEPOLARIZING
    gate_fidelity: float = DEFAULTS.gate_fidelity
    two_qubit_fidelity: Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", NoiseMode(self.mode))
        if self.mode is NoiseMode.NOISELESS:
            object.__setattr__(self, "gate_fidelity", 1.0)
            object.__setattr__(self, "two_qubit_fidelity", None)
            return
        for name in ("gate_fidelity", "two_qubit_fidelity"):
            value = getattr(self, name)
            if value is not None and not 0.0 < value <= 1.0:
                raise ArgumentError(f"{name} must lie in (0, 1], got {value}")

    @classmethod
    def noiseless(cls) -> "NoiseModel":
        return cls(mode=NoiseMode.NOISELESS)

    @classmethod
    def from_fidelity(cls, fidelity: float) -> "NoiseModel":
        """Noiseless model for ``fidelity == 1``, global depolarizing otherwise."""
        if fidelity == 1.0:
            return cls.noiseless()
        return cls(mode=NoiseMode.GLOBAL_DEPOLARIZING, gate_fidelity=fidelity)

    @classmethod
    def reference_hardware(cls) -> "NoiseModel":
        """Separate single- and two-qubit fidelities of the reference device."""
        return cls(
            mode=NoiseMode.GLOBAL_DEPOLARIZING,
            gate_fidelity=1.0 - REFERENCE_HARDWARE.single_qubit_error,
            two_qubit_fidelity=1.0 - REFERENCE_HARDWARE.two_qubit_error,
        )

    def decay(self, gate_count: int, two_qubit_count: int = 0) -> float:
        """Return the fidelity factor applied to non-identity expectations.

        ``f^G`` with a single fidelity, otherwise
        ``f1^(G - G2) * f2^G2`` where ``G2`` counts the CNOTs.
        """
        if gate_count < 0 or not 0 <= two_qubit_count <= gate_count:
            raise ArgumentError(f"invalid gate counts ({gate_count}, {two_qubit_count})")
        if self.mode is NoiseMode.NOISELESS:
            return 1.0
        if self.two_qubit_fidelity is None:
            return float(self.gate_fidelity**gate_count)
        single = gate_count - two_qubit_count
        return float(self.gate_fidelity**single * self.two_qubit_fidelity**two_qubit_count)


def expectation_analytic(state: Statevector, pauli: PauliString) -> float:
    """Return ``<s|P|s>`` exactly in O(2ⁿ)."""
    if state.n_qubits != pauli.n_qubits:
        raise ShapeError(f"state has {state.n_qubits} qubits, Pauli string has {pauli.n_qubits}")
    amplitudes = state.amplitudes
    rows = np.arange(amplitudes.shape[0])
    cols, phases = pauli.row_phases(rows)
    value = np.vdot(amplitudes[cols], phases * amplitudes)
    if abs(value.imag) > IMAG_TOL:
        logger.warning(f"Discarding imaginary residue {value.imag:.3e} of <{pauli.label}>")
    return float(np.clip(value.real, -1.0, 1.0))


def measurement_distribution(state: Statevector, pauli: PauliString) -> Tuple[np.ndarray, np.ndarray]:
    """Return outcome probabilities in the rotated basis and their ±1 scores.

    The score of outcome ``b`` is ``(-1)^popcount(b & support_mask)``.
    """
    rotated = apply_circuit(measurement_basis_change(pauli), state)
    probabilities = rotated.probabilities()
    probabilities = probabilities / probabilities.sum()
    outcomes = np.arange(probabilities.shape[0])
    scores = 1.0 - 2.0 * parity(outcomes & pauli.support_mask, pauli.n_qubits)
    return probabilities, scores


def sample_expectation(
    probabilities: np.ndarray, scores: np.ndarray, shots: int, seed: int
) -> ExpectationEstimate:
    """Draw `shots` outcomes and average their scores."""
    if shots < 1:
        raise ArgumentError(f"shots must be at least 1, got {shots}")
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, probabilities)
    value = float(counts @ scores) / shots
    if shots == 1:
        return ExpectationEstimate(value=value, shots=shots, std_error=0.0)
    # scores are ±1, so the sample variance follows from the mean alone
    variance = max(0.0, (1.0 - value * value) * shots / (shots - 1))
    return ExpectationEstimate(value=value, shots=shots, std_error=float(np.sqrt(variance / shots)))


def expectation_sampled(state: Statevector, pauli: PauliString, shots: int, seed: int) -> ExpectationEstimate:
    """Estimate ``<s|P|s>`` from `shots` simulated measurements.

    The state is rotated with `measurement_basis_change`, bitstrings are
    drawn from the squared amplitudes and scored by the parity over the
    support of `pauli`.  The result is fully determined by `seed`.

    Raises
    ------
    ArgumentError
        If ``shots < 1``.
    """
    if shots < 1:
        raise ArgumentError(f"shots must be at least 1, got {shots}")
    if pauli.is_identity:
        return ExpectationEstimate(value=1.0, shots=shots, std_error=0.0)
    probabilities, scores = measurement_distribution(state, pauli)
    return sample_expectation(probabilities, scores, shots, seed)


def apply_global_depolarizing(
    e_ideal: float,
    pauli: PauliString,
    noise: NoiseModel,
    gate_count: int,
    two_qubit_count: int = 0,
) -> float:
    """Damp an ideal expectation by the circuit fidelity.

    The identity string is returned unchanged; every other string is scaled
    by ``noise.decay(gate_count, two_qubit_count)``.
    """
    if abs(e_ideal) > 1.0 + 1e-12:
        raise ArgumentError(f"expectation value {e_ideal} outside [-1, 1]")
    if gate_count < 0:
        raise ArgumentError(f"gate count must be non-negative, got {gate_count}")
    if pauli.is_identity:
        return float(e_ideal)
    return float(e_ideal) * noise.decay(gate_count, two_qubit_count)
