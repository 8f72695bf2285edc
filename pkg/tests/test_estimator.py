import numpy as np
import pytest

from nisq_modal.analytics.estimator import (
    eigendecompose,
    error_metrics,
    estimate_eigenvalue,
    evaluate_plan,
    prepare_estimation,
    resonance_frequency,
)
from nisq_modal.config import DEFAULTS
from nisq_modal.exceptions import ArgumentError, DomainError, MetricUndefinedError, SymmetryError
from nisq_modal.models.dynamical_matrix import assemble_dynamical_matrix, pad_to_qubit_dimension
from nisq_modal.models.oscillators import build_chain, geometry_from_selector, standard_ladder
from nisq_modal.quantum.measurement import NoiseModel
from nisq_modal.quantum.pauli import decompose, mixed_state_value

LADDER = standard_ladder(heights=DEFAULTS.full_blade_heights)


def padded(selector):
    matrix, _ = pad_to_qubit_dimension(assemble_dynamical_matrix(geometry_from_selector(selector)))
    return matrix


@pytest.fixture(scope="module")
def ladder_plans():
    return {selector: prepare_estimation(padded(selector), sampling=False) for selector in LADDER}


def test_eigendecompose_examples(two_by_two):
    values = [lam for lam, _ in eigendecompose(two_by_two)]
    assert values == pytest.approx([1.0, 3.0])
    values = [lam for lam, _ in eigendecompose(np.eye(4))]
    assert values == pytest.approx([1.0] * 4)
    values = [lam for lam, _ in eigendecompose(padded("chain:3"))]
    assert values == pytest.approx([0.0, 2 - np.sqrt(2), 2.0, 2 + np.sqrt(2)], abs=1e-12)


def test_eigenvectors_are_orthonormal():
    vectors = np.column_stack([v for _, v in eigendecompose(padded("blade:b:30"))])
    assert np.allclose(vectors.T @ vectors, np.eye(vectors.shape[1]), atol=1e-9)


def test_eigendecompose_rejects_asymmetric():
    with pytest.raises(SymmetryError):
        eigendecompose(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_noiseless_two_by_two(two_by_two):
    estimate = estimate_eigenvalue(two_by_two, noise=NoiseModel.noiseless())
    assert estimate.lambda_est == pytest.approx(3.0, abs=1e-12)
    assert estimate.omega_est == pytest.approx(np.sqrt(3.0))
    assert estimate.rel_error == pytest.approx(0.0, abs=1e-12)
    assert estimate.gate_count == 1
    assert estimate.total_terms == 2
    assert estimate.shots_per_term == 0


def test_half_fidelity_two_by_two(two_by_two):
    # one encoding gate, so f = 0.5 gives f^G = 0.5
    estimate = estimate_eigenvalue(two_by_two, noise=NoiseModel.from_fidelity(0.5))
    assert estimate.lambda_est == pytest.approx(2.5)
    assert estimate.rel_error == pytest.approx(0.5)
    assert (estimate.eps_lambda, estimate.delta_lambda) == pytest.approx((0.5, 1.0))


def test_vanishing_fidelity_gives_mixed_value(two_by_two):
    estimate = estimate_eigenvalue(two_by_two, noise=NoiseModel.from_fidelity(1e-12))
    assert estimate.lambda_est == pytest.approx(estimate.lambda_mixed, abs=1e-9)
    assert estimate.rel_error == pytest.approx(1.0, abs=1e-9)


def test_noiseless_exactness_on_ladder(ladder_plans):
    noiseless = NoiseModel.noiseless()
    for selector, plan in ladder_plans.items():
        estimate = evaluate_plan(plan, noise=noiseless)
        assert estimate.lambda_est == pytest.approx(estimate.lambda_exact, abs=1e-8), selector
        assert estimate.rel_error == pytest.approx(0.0, abs=1e-9), selector


@pytest.mark.parametrize("f", [0.99, 0.993, 0.999])
def test_closed_form_noise_law(ladder_plans, f):
    noise = NoiseModel.from_fidelity(f)
    for selector, plan in ladder_plans.items():
        estimate = evaluate_plan(plan, noise=noise)
        assert estimate.rel_error == pytest.approx(1 - f**estimate.gate_count, abs=1e-9), selector


def test_mixed_value_is_normalised_trace(ladder_plans):
    for selector in LADDER:
        H = padded(selector)
        assert ladder_plans[selector].lambda_mixed == pytest.approx(
            np.trace(H.values) / H.dim, abs=1e-12
        )
        assert mixed_state_value(decompose(H.values)) == pytest.approx(np.trace(H.values) / H.dim, abs=1e-12)


def test_every_eigenpair_is_exact_without_noise():
    H = padded("chain:5")
    noiseless = NoiseModel.noiseless()
    exact = [lam for lam, _ in eigendecompose(H)]
    for k in range(H.dim):
        assert estimate_eigenvalue(H, k=k, noise=noiseless).lambda_est == pytest.approx(exact[k], abs=1e-8)


def test_chain_gate_counts_increase_with_size(ladder_plans):
    counts = [ladder_plans[f"chain:{n}"].gate_count for n in DEFAULTS.ladder_chain_sizes]
    assert all(later > earlier for earlier, later in zip(counts, counts[1:]))
    noise = NoiseModel.from_fidelity(0.993)
    errors = [evaluate_plan(ladder_plans[f"chain:{n}"], noise=noise).rel_error for n in DEFAULTS.ladder_chain_sizes]
    assert all(later > earlier for earlier, later in zip(errors, errors[1:]))


def test_sampled_estimate_is_reproducible():
    H = padded("chain:8")
    a = estimate_eigenvalue(H, shots=256, seed=9)
    b = estimate_eigenvalue(H, shots=256, seed=9)
    c = estimate_eigenvalue(H, shots=256, seed=10)
    assert a == b
    assert a.lambda_est != c.lambda_est
    assert a.shots_per_term == 256


def test_shot_noise_scales_with_inverse_square_root():
    plan = prepare_estimation(padded("chain:8"))
    noiseless = NoiseModel.noiseless()
    exact = evaluate_plan(plan, noise=noiseless).lambda_est

    def mean_error(shots):
        errors = [
            abs(evaluate_plan(plan, noise=noiseless, shots=shots, seed=trial * 7919).lambda_est - exact)
            for trial in range(400)
        ]
        return np.mean(errors)

    ratio = mean_error(256) / mean_error(1024)
    assert 1.6 <= ratio <= 2.4


def test_negative_estimate_is_clamped():
    H = np.array([[-2.0, 1.0], [1.0, -2.0]])
    estimate = estimate_eigenvalue(H, noise=NoiseModel.noiseless())
    assert estimate.lambda_est == pytest.approx(-1.0)
    assert estimate.clamped
    assert estimate.omega_est == 0.0


def test_non_maximum_eigenpair_has_no_relative_error(two_by_two):
    estimate = estimate_eigenvalue(two_by_two, k=0, noise=NoiseModel.noiseless())
    assert estimate.lambda_est == pytest.approx(1.0)
    assert estimate.rel_error is None


def test_estimate_argument_checks(two_by_two):
    with pytest.raises(ArgumentError):
        estimate_eigenvalue(two_by_two, k=2)
    with pytest.raises(ArgumentError):
        estimate_eigenvalue(two_by_two, shots=0)
    plan = prepare_estimation(two_by_two, sampling=False)
    with pytest.raises(ArgumentError):
        evaluate_plan(plan, shots=10)


@pytest.mark.parametrize("lam, omega", [(0.0, 0.0), (3.0, np.sqrt(3.0)), (4.0, 2.0)])
def test_resonance_frequency(lam, omega):
    assert resonance_frequency(lam) == pytest.approx(omega)


def test_resonance_frequency_domain():
    with pytest.raises(DomainError):
        resonance_frequency(-0.1)


@pytest.mark.parametrize(
    "args, expected",
    [((3, 3, 2), (0, 1, 0)), ((3, 2, 2), (1, 1, 1)), ((3, 2.5, 2), (0.5, 1, 0.5))],
)
def test_error_metrics(args, expected):
    assert error_metrics(*args) == pytest.approx(expected)


def test_error_metrics_undefined():
    with pytest.raises(MetricUndefinedError):
        error_metrics(2.0, 2.0, 2.0)


def test_chain_estimate_matches_closed_form_spectrum():
    H, _ = pad_to_qubit_dimension(assemble_dynamical_matrix(build_chain(16)))
    estimate = estimate_eigenvalue(H, noise=NoiseModel.noiseless())
    assert estimate.lambda_exact == pytest.approx(4 * np.sin(16 * np.pi / 34) ** 2, abs=1e-9)
