"""Gate-level circuits, statevectors and the amplitude-encoding circuit.

The encoding circuit prepares a real unit vector from ``|0…0>`` with a
binary tree of uniformly controlled RY rotations.  Level ``j`` rotates
qubit ``j`` conditioned on qubits ``0..j-1``; each uniformly controlled
rotation is expanded into ``2^j`` RY gates interleaved with ``2^j`` CNOTs
following a Gray code.  Zero rotations are dropped and CNOT runs that
cancel are removed afterwards.
"""

from dataclasses import dataclass
from enum import Enum
from math import atan2, cos, sin, sqrt
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import hadamard

from ..exceptions import EncodingError, ShapeError
from ..logging_config import get_logger
from ..utils.validation import is_power_of_two
from .pauli import PauliString

logger = get_logger(__name__)

ZERO_ANGLE_TOL = 1e-12
NORM_TOL = 1e-10


class GateKind(str, Enum):
    """Elementary gates understood by the simulator."""

    RY = "RY"
    RZ = "RZ"
    CNOT = "CNOT"
    HAD = "HAD"
    SDG = "SDG"


_SQRT2_INV = 1.0 / sqrt(2.0)
_FIXED_MATRICES = {
    GateKind.HAD: np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    GateKind.SDG: np.array([[1, 0], [0, -1j]], dtype=complex),
}


@dataclass(frozen=True)
class Gate:
    """One elementary gate.  CNOT qubits are ``(control, target)``."""

    kind: GateKind
    qubits: Tuple[int, ...]
    angle: Optional[float] = None

    @property
    def is_two_qubit(self) -> bool:
        return self.kind is GateKind.CNOT

    def matrix(self) -> np.ndarray:
        """2 x 2 matrix of a single-qubit gate."""
        if self.kind is GateKind.RY:
            c, s = cos(self.angle / 2), sin(self.angle / 2)
            return np.array([[c, -s], [s, c]], dtype=complex)
        if self.kind is GateKind.RZ:
            phase = np.exp(0.5j * self.angle)
            return np.array([[1 / phase, 0], [0, phase]], dtype=complex)
        if self.kind in _FIXED_MATRICES:
            return _FIXED_MATRICES[self.kind]
        raise ShapeError(f"{self.kind.value} is not a single-qubit gate")

    def to_record(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {"gate": self.kind.value, "qubits": list(self.qubits)}
        if self.angle is not None:
            record["angle"] = float(self.angle)
        return record


def ry(target: int, angle: float) -> Gate:
    return Gate(GateKind.RY, (target,), float(angle))


def rz(target: int, angle: float) -> Gate:
    return Gate(GateKind.RZ, (target,), float(angle))


def cnot(control: int, target: int) -> Gate:
    return Gate(GateKind.CNOT, (control, target))


def had(target: int) -> Gate:
    return Gate(GateKind.HAD, (target,))


def sdg(target: int) -> Gate:
    return Gate(GateKind.SDG, (target,))


@dataclass(frozen=True)
class Circuit:
    """Ordered list of elementary gates on ``n_qubits`` qubits."""

    n_qubits: int
    gates: Tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            if any(not 0 <= q < self.n_qubits for q in gate.qubits):
                raise ShapeError(f"{gate.kind.value} on {gate.qubits} exceeds {self.n_qubits} qubits")
            if gate.is_two_qubit and gate.qubits[0] == gate.qubits[1]:
                raise ShapeError("CNOT control and target must differ")

    def __len__(self) -> int:
        return len(self.gates)

    @property
    def two_qubit_count(self) -> int:
        return sum(1 for gate in self.gates if gate.is_two_qubit)

    def to_records(self) -> List[Dict[str, Any]]:
        """Return the JSON export form ``[{"gate", "qubits", "angle"?}]``."""
        return [gate.to_record() for gate in self.gates]


@dataclass(frozen=True)
class Statevector:
    """Normalised vector of 2ⁿ complex amplitudes."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amplitudes = np.array(self.amplitudes, dtype=complex, copy=True)
        if amplitudes.shape != (1 << self.n_qubits,):
            raise ShapeError(f"expected {1 << self.n_qubits} amplitudes, got shape {amplitudes.shape}")
        norm = float(np.sum(np.abs(amplitudes) ** 2))
        if abs(norm - 1.0) > NORM_TOL:
            raise ShapeError(f"statevector is not normalised (squared norm {norm:.12g})")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def zero(cls, n_qubits: int) -> "Statevector":
        """Return ``|0…0>``."""
        amplitudes = np.zeros(1 << n_qubits, dtype=complex)
        amplitudes[0] = 1.0
        return cls(n_qubits, amplitudes)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def _apply_single(psi: np.ndarray, matrix: np.ndarray, qubit: int) -> np.ndarray:
    psi = np.tensordot(matrix, psi, axes=([1], [qubit]))
    return np.moveaxis(psi, 0, qubit)


def _apply_cnot(psi: np.ndarray, control: int, target: int) -> np.ndarray:
    psi = psi.copy()
    n = psi.ndim
    on_zero = [slice(None)] * n
    on_one = [slice(None)] * n
    on_zero[control] = on_one[control] = 1
    on_zero[target], on_one[target] = 0, 1
    on_zero, on_one = tuple(on_zero), tuple(on_one)
    psi[on_zero], psi[on_one] = psi[on_one].copy(), psi[on_zero].copy()
    return psi


def apply_circuit(circuit: Circuit, state: Statevector) -> Statevector:
    """Apply every gate of `circuit` to `state` and return the new state.

    Raises
    ------
    ShapeError
        If the circuit and state act on different numbers of qubits.
    """
    if circuit.n_qubits != state.n_qubits:
        raise ShapeError(f"circuit has {circuit.n_qubits} qubits, state has {state.n_qubits}")
    n = state.n_qubits
    psi = np.array(state.amplitudes, dtype=complex).reshape([2] * n)
    for gate in circuit.gates:
        if gate.is_two_qubit:
            psi = _apply_cnot(psi, gate.qubits[0], gate.qubits[1])
        else:
            psi = _apply_single(psi, gate.matrix(), gate.qubits[0])
    return Statevector(n, psi.reshape(-1))


def _gray(i: int) -> int:
    return i ^ (i >> 1)


def _trailing_zeros(i: int) -> int:
    return (i & -i).bit_length() - 1


def _collapse_cnot_runs(gates: List[Gate]) -> List[Gate]:
    """Cancel CNOTs within each run of consecutive CNOTs on the same target.

    Such CNOTs commute, so only controls appearing an odd number of times
    survive.
    """
    result: List[Gate] = []
    run: List[Gate] = []

    def flush() -> None:
        counts: Dict[int, int] = {}
        for gate in run:
            counts[gate.qubits[0]] = counts.get(gate.qubits[0], 0) + 1
        for gate in run:
            control = gate.qubits[0]
            if counts.get(control, 0) % 2 == 1:
                result.append(gate)
                counts[control] = 0
        run.clear()

    for gate in gates:
        if gate.is_two_qubit and (not run or run[0].qubits[1] == gate.qubits[1]):
            run.append(gate)
            continue
        flush()
        if gate.is_two_qubit:
            run.append(gate)
        else:
            result.append(gate)
    flush()
    return result


def multiplexed_ry(alphas: Sequence[float], target: int, zero_tol: float = ZERO_ANGLE_TOL) -> List[Gate]:
    """Expand a uniformly controlled RY into elementary RY and CNOT gates.

    ``alphas[b]`` is the rotation applied when the control qubits
    ``0..k-1`` hold the bit pattern ``b`` (qubit 0 most significant).
    """
    alphas = np.asarray(alphas, dtype=float)
    size = alphas.shape[0]
    k = size.bit_length() - 1
    if k == 0:
        return [ry(target, alphas[0])] if abs(alphas[0]) > zero_tol else []

    walsh = hadamard(size, dtype=float)
    order = [_gray(i) for i in range(size)]
    thetas = walsh[order, :] @ alphas / size

    gates: List[Gate] = []
    for i, theta in enumerate(thetas):
        if abs(theta) > zero_tol:
            gates.append(ry(target, theta))
        position = _trailing_zeros(i + 1) if i < size - 1 else k - 1
        gates.append(cnot(k - 1 - position, target))
    return _collapse_cnot_runs(gates)


def synthesize_encoding(vector: Sequence[float], zero_tol: float = ZERO_ANGLE_TOL) -> Circuit:
    """Build the circuit that prepares `vector` from ``|0…0>``.

    Parameters
    ----------
    vector: sequence of float
        Real unit vector whose length is a power of two (at least 2).
    zero_tol: float, optional
        Rotations with ``|angle| <= zero_tol`` are elided.

    Returns
    -------
    Circuit
        RY and CNOT gates; applying it to ``|0…0>`` yields `vector` up to a
        global sign.

    Raises
    ------
    EncodingError
        If the vector is complex, not normalised or of the wrong length.
    """
    v = np.asarray(vector)
    if np.iscomplexobj(v):
        if np.max(np.abs(v.imag), initial=0.0) > zero_tol:
            raise EncodingError("amplitude encoding expects a real vector")
        v = v.real
    v = v.astype(float).reshape(-1)
    size = v.shape[0]
    if size < 2 or not is_power_of_two(size):
        raise EncodingError(f"vector length {size} is not a power of two of at least 2")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > NORM_TOL:
        raise EncodingError(f"vector is not normalised (norm {norm:.12g})")

    n = size.bit_length() - 1
    gates: List[Gate] = []
    for level in range(n):
        blocks = v.reshape(1 << level, 2, size >> (level + 1))
        if level == n - 1:
            # signed leaves: (cos a, sin a) * r reproduces (v[2b], v[2b+1])
            alphas = [2.0 * atan2(right, left) for left, right in blocks[:, :, 0]]
        else:
            left = np.linalg.norm(blocks[:, 0, :], axis=1)
            right = np.linalg.norm(blocks[:, 1, :], axis=1)
            alphas = [2.0 * atan2(r, l) for l, r in zip(left, right)]
        gates.extend(multiplexed_ry(alphas, target=level, zero_tol=zero_tol))

    circuit = Circuit(n, tuple(gates))
    logger.debug(f"Encoding circuit for {n} qubits uses {len(circuit)} gates")
    return circuit


def measurement_basis_change(pauli: PauliString) -> Circuit:
    """Rotate the measurement basis so that `pauli` becomes diagonal.

    X qubits get HAD, Y qubits get SDG followed by HAD; I and Z qubits are
    left alone.
    """
    gates: List[Gate] = []
    for q, symbol in enumerate(pauli.label):
        if symbol == "X":
            gates.append(had(q))
        elif symbol == "Y":
            gates.extend((sdg(q), had(q)))
    return Circuit(pauli.n_qubits, tuple(gates))


def gate_count(circuit: Circuit) -> int:
    """Number of elementary gates of an (encoding) circuit."""
    return len(circuit.gates)


if __name__ == "__main__":
    v = np.array([0.5, -0.5, 0.5, 0.5])
    c = synthesize_encoding(v)
    print(c.to_records())
    print(apply_circuit(c, Statevector.zero(2)).amplitudes.real)
