import numpy as np
import pytest

from nisq_modal.exceptions import EncodingError, ShapeError
from nisq_modal.quantum.circuit import (
    Circuit,
    GateKind,
    Statevector,
    apply_circuit,
    cnot,
    gate_count,
    had,
    measurement_basis_change,
    ry,
    rz,
    sdg,
    synthesize_encoding,
)
from nisq_modal.quantum.measurement import expectation_analytic
from nisq_modal.quantum.pauli import PauliString


def random_unit_vector(rng, size):
    v = rng.normal(size=size)
    return v / np.linalg.norm(v)


def basis_state(n_qubits, index):
    amplitudes = np.zeros(1 << n_qubits, dtype=complex)
    amplitudes[index] = 1.0
    return Statevector(n_qubits, amplitudes)


def test_ry_pi_flips_zero():
    state = apply_circuit(Circuit(1, (ry(0, np.pi),)), Statevector.zero(1))
    assert np.allclose(np.abs(state.amplitudes), [0.0, 1.0])


@pytest.mark.parametrize("theta", [0.0, 0.4, np.pi / 2, np.pi])
def test_rz_rotates_about_z(theta):
    state = apply_circuit(Circuit(1, (had(0), rz(0, theta))), Statevector.zero(1))
    assert expectation_analytic(state, PauliString.from_label("X")) == pytest.approx(np.cos(theta), abs=1e-12)
    assert expectation_analytic(state, PauliString.from_label("Z")) == pytest.approx(0.0, abs=1e-12)


def test_cnot_on_ten_gives_eleven():
    state = apply_circuit(Circuit(2, (cnot(0, 1),)), basis_state(2, 0b10))
    assert np.allclose(state.amplitudes, [0, 0, 0, 1])


def test_cnot_leaves_control_zero_alone():
    state = apply_circuit(Circuit(2, (cnot(0, 1),)), basis_state(2, 0b01))
    assert np.allclose(state.amplitudes, [0, 1, 0, 0])


def test_qubit_zero_is_most_significant():
    state = apply_circuit(Circuit(3, (ry(0, np.pi),)), Statevector.zero(3))
    assert np.allclose(np.abs(state.amplitudes), np.eye(8)[4])


def test_circuit_validation():
    with pytest.raises(ShapeError):
        Circuit(2, (ry(2, 0.1),))
    with pytest.raises(ShapeError):
        Circuit(2, (cnot(1, 1),))
    with pytest.raises(ShapeError):
        apply_circuit(Circuit(2, ()), Statevector.zero(3))
    with pytest.raises(ShapeError):
        Statevector(1, np.array([1.0, 1.0]))


def test_norm_is_preserved(rng):
    gates = []
    for _ in range(40):
        q = int(rng.integers(3))
        gates.append(ry(q, rng.uniform(-np.pi, np.pi)))
        gates.append(cnot(q, (q + 1) % 3))
        gates.append(had(int(rng.integers(3))))
        gates.append(sdg(int(rng.integers(3))))
    state = Statevector(3, random_unit_vector(rng, 8))
    out = apply_circuit(Circuit(3, tuple(gates)), state)
    assert np.sum(np.abs(out.amplitudes) ** 2) == pytest.approx(1.0, abs=1e-10)


def test_state_is_immutable():
    state = Statevector.zero(2)
    apply_circuit(Circuit(2, (had(0),)), state)
    assert np.array_equal(state.amplitudes, [1, 0, 0, 0])
    with pytest.raises(ValueError):
        state.amplitudes[0] = 0


def test_encoding_of_plus_state():
    c = synthesize_encoding([1 / np.sqrt(2), 1 / np.sqrt(2)])
    assert gate_count(c) == 1
    assert c.gates[0].kind is GateKind.RY
    assert c.gates[0].angle == pytest.approx(np.pi / 2)


def test_encoding_of_basis_state_is_empty():
    assert gate_count(synthesize_encoding([1.0, 0.0, 0.0, 0.0])) == 0
    assert gate_count(Circuit(2, ())) == 0


def test_encoding_errors():
    with pytest.raises(EncodingError):
        synthesize_encoding([1.0, 1.0])
    with pytest.raises(EncodingError):
        synthesize_encoding([1.0, 0.0, 0.0])
    with pytest.raises(EncodingError):
        synthesize_encoding([1.0])
    with pytest.raises(EncodingError):
        synthesize_encoding(np.array([1j, 0.0]))


@pytest.mark.parametrize("n_qubits", range(1, 7))
def test_encoding_fidelity_on_random_vectors(rng, n_qubits):
    size = 1 << n_qubits
    for _ in range(1000):
        v = random_unit_vector(rng, size)
        prepared = apply_circuit(synthesize_encoding(v), Statevector.zero(n_qubits))
        assert abs(np.vdot(v, prepared.amplitudes)) > 1 - 1e-9


def test_encoding_reproduces_signs(rng):
    v = random_unit_vector(rng, 16)
    prepared = apply_circuit(synthesize_encoding(v), Statevector.zero(4)).amplitudes
    assert np.allclose(prepared.imag, 0.0, atol=1e-12)
    assert np.allclose(prepared.real, v, atol=1e-10) or np.allclose(prepared.real, -v, atol=1e-10)


def test_sparse_vectors_need_fewer_gates():
    v = np.zeros(8)
    v[[0, 5]] = 1 / np.sqrt(2)
    c = synthesize_encoding(v)
    prepared = apply_circuit(c, Statevector.zero(3)).amplitudes
    assert np.allclose(np.abs(prepared.real), v, atol=1e-12)
    assert gate_count(c) < 13


def test_dense_gate_counts(rng):
    # 2^n - 1 rotations and 2^n - 2 CNOTs for a generic vector
    for n_qubits in range(1, 7):
        c = synthesize_encoding(random_unit_vector(rng, 1 << n_qubits))
        assert gate_count(c) == 2 ** (n_qubits + 1) - 3
        assert c.two_qubit_count == 2**n_qubits - 2


def test_gate_count_grows_linearly(rng):
    # the fixed rotation overhead dominates below three qubits
    sizes, counts = [], []
    for n_qubits in range(3, 7):
        worst = max(gate_count(synthesize_encoding(random_unit_vector(rng, 1 << n_qubits))) for _ in range(20))
        sizes.append(1 << n_qubits)
        counts.append(worst)
    exponent = np.polyfit(np.log(sizes), np.log(counts), 1)[0]
    assert 0.9 <= exponent <= 1.1


def test_basis_change_circuits():
    assert len(measurement_basis_change(PauliString.from_label("ZZZ"))) == 0
    x = measurement_basis_change(PauliString.from_label("X"))
    assert [g.kind for g in x.gates] == [GateKind.HAD]
    y = measurement_basis_change(PauliString.from_label("Y"))
    assert [g.kind for g in y.gates] == [GateKind.SDG, GateKind.HAD]
    mixed = measurement_basis_change(PauliString.from_label("IYXZ"))
    assert [(g.kind, g.qubits) for g in mixed.gates] == [
        (GateKind.SDG, (1,)),
        (GateKind.HAD, (1,)),
        (GateKind.HAD, (2,)),
    ]


@pytest.mark.parametrize("label", ["Y", "X", "XY", "YZ", "YIX"])
def test_basis_change_diagonalises_the_observable(rng, label):
    p = PauliString.from_label(label)
    amplitudes = rng.normal(size=1 << p.n_qubits) + 1j * rng.normal(size=1 << p.n_qubits)
    state = Statevector(p.n_qubits, amplitudes / np.linalg.norm(amplitudes))
    rotated = apply_circuit(measurement_basis_change(p), state)
    outcomes = np.arange(1 << p.n_qubits)
    scores = np.array([(-1) ** bin(b & p.support_mask).count("1") for b in outcomes])
    assert np.sum(rotated.probabilities() * scores) == pytest.approx(expectation_analytic(state, p), abs=1e-12)


def test_circuit_records():
    c = Circuit(2, (ry(0, 0.5), cnot(0, 1)))
    assert c.to_records() == [
        {"gate": "RY", "qubits": [0], "angle": 0.5},
        {"gate": "CNOT", "qubits": [0, 1]},
    ]
