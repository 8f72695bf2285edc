import numpy as np
import pytest

from nisq_modal.exceptions import ArgumentError
from nisq_modal.quantum.circuit import Statevector
from nisq_modal.quantum.measurement import (
    NoiseMode,
    NoiseModel,
    apply_global_depolarizing,
    expectation_analytic,
    expectation_sampled,
)
from nisq_modal.quantum.pauli import PauliString

PLUS = Statevector(1, np.array([1.0, 1.0]) / np.sqrt(2))
X, Y, Z = (PauliString.from_label(s) for s in "XYZ")


def test_analytic_examples():
    assert expectation_analytic(Statevector.zero(1), Z) == pytest.approx(1.0)
    assert expectation_analytic(PLUS, X) == pytest.approx(1.0)
    assert expectation_analytic(PLUS, Z) == pytest.approx(0.0, abs=1e-15)
    plus_i = Statevector(1, np.array([1.0, 1j]) / np.sqrt(2))
    assert expectation_analytic(plus_i, Y) == pytest.approx(1.0)


def test_sampled_deterministic_outcome():
    estimate = expectation_sampled(Statevector.zero(1), Z, shots=17, seed=3)
    assert estimate.value == 1.0
    assert estimate.std_error == 0.0
    assert estimate.shots == 17


def test_sampled_identity_is_exactly_one():
    estimate = expectation_sampled(PLUS, PauliString.identity(1), shots=5, seed=0)
    assert estimate.value == 1.0


def test_sampled_plus_state_in_z_basis():
    estimate = expectation_sampled(PLUS, Z, shots=10_000, seed=11)
    assert estimate.std_error == pytest.approx(0.01, rel=0.01)
    assert abs(estimate.value) < 5 * estimate.std_error


def test_sampled_is_reproducible():
    a = expectation_sampled(PLUS, Z, shots=1000, seed=42)
    b = expectation_sampled(PLUS, Z, shots=1000, seed=42)
    assert a == b


def test_shots_must_be_positive():
    with pytest.raises(ArgumentError):
        expectation_sampled(PLUS, Z, shots=0, seed=1)


def test_sampled_agrees_with_analytic(rng):
    labels = ["X", "Y", "Z", "XZ", "YY", "ZX", "XYZ", "ZZI", "IYX"]
    hits = 0
    for trial in range(1000):
        label = labels[trial % len(labels)]
        p = PauliString.from_label(label)
        size = 1 << p.n_qubits
        amplitudes = rng.normal(size=size) + 1j * rng.normal(size=size)
        state = Statevector(p.n_qubits, amplitudes / np.linalg.norm(amplitudes))
        estimate = expectation_sampled(state, p, shots=1000, seed=trial)
        exact = expectation_analytic(state, p)
        hits += abs(estimate.value - exact) <= 5 * estimate.std_error
    assert hits >= 990


def test_depolarizing_examples():
    noise = NoiseModel(gate_fidelity=0.99)
    assert apply_global_depolarizing(1.0, X, noise, 100) == pytest.approx(0.99**100)
    assert apply_global_depolarizing(1.0, X, noise, 100) == pytest.approx(0.3660, abs=1e-4)
    assert apply_global_depolarizing(0.3, PauliString.identity(1), noise, 100) == 0.3
    assert apply_global_depolarizing(-0.4, X, NoiseModel(gate_fidelity=1.0), 50) == -0.4


def test_depolarizing_is_monotone():
    noise = NoiseModel(gate_fidelity=0.993)
    values = [apply_global_depolarizing(0.8, Z, noise, g) for g in range(0, 200, 10)]
    assert all(later < earlier for earlier, later in zip(values, values[1:]))


def test_depolarizing_argument_checks():
    with pytest.raises(ArgumentError):
        apply_global_depolarizing(1.5, X, NoiseModel(), 1)
    with pytest.raises(ArgumentError):
        apply_global_depolarizing(0.5, X, NoiseModel(), -1)


def test_noise_model_validation_and_presets():
    assert NoiseModel(mode="noiseless", gate_fidelity=0.5).gate_fidelity == 1.0
    assert NoiseModel.from_fidelity(1.0).mode is NoiseMode.NOISELESS
    assert NoiseModel.from_fidelity(0.9).mode is NoiseMode.GLOBAL_DEPOLARIZING
    with pytest.raises(ArgumentError):
        NoiseModel(gate_fidelity=0.0)
    with pytest.raises(ArgumentError):
        NoiseModel(gate_fidelity=1.2)


def test_two_qubit_fidelity_decay():
    noise = NoiseModel(gate_fidelity=0.99, two_qubit_fidelity=0.9)
    assert noise.decay(10, 4) == pytest.approx(0.99**6 * 0.9**4)
    assert NoiseModel(gate_fidelity=0.99).decay(10, 4) == pytest.approx(0.99**10)
    reference = NoiseModel.reference_hardware()
    assert reference.gate_fidelity == pytest.approx(0.99975)
    assert reference.two_qubit_fidelity == pytest.approx(0.993)
    with pytest.raises(ArgumentError):
        noise.decay(3, 4)
