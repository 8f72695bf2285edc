"""Hybrid eigenvalue estimation.

The routine has four steps:

1. compute the eigenvectors of the padded dynamical matrix classically;
2. decompose the matrix into weighted Pauli strings;
3. amplitude-encode the chosen eigenvector and estimate every Pauli
   expectation on the encoded state (exactly or by sampling shots);
4. sum the weighted expectations to obtain the eigenvalue estimate.

Steps 1 to 3 up to the encoded state are independent of noise and seed,
so they are bundled in an `EstimationPlan` that sweeps reuse across
repetitions.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import numpy as np
from scipy.linalg import eigh

from ..config import DEFAULTS
from ..exceptions import ArgumentError, DomainError, MetricUndefinedError, ShapeError, SymmetryError
from ..logging_config import get_logger
from ..models.dynamical_matrix import PaddedMatrix
from ..quantum.circuit import Circuit, Statevector, apply_circuit, gate_count, synthesize_encoding
from ..quantum.measurement import (
    NoiseModel,
    apply_global_depolarizing,
    expectation_analytic,
    measurement_distribution,
    sample_expectation,
)
from ..quantum.pauli import PauliDecomposition, PauliString, decompose, mixed_state_value
from ..types import EigenEstimate
from ..utils.validation import is_square, is_symmetric

logger = get_logger(__name__)

MatrixLike = Union[PaddedMatrix, np.ndarray]


def _values(matrix: MatrixLike) -> np.ndarray:
    if isinstance(matrix, PaddedMatrix):
        return matrix.values
    return np.asarray(matrix, dtype=float)


def eigendecompose(matrix: MatrixLike) -> List[Tuple[float, np.ndarray]]:
    """Return all eigenpairs of a real symmetric matrix, eigenvalues ascending.

    Raises
    ------
    SymmetryError
        If the matrix is not symmetric within the configured tolerance.
    """
    H = _values(matrix)
    if not is_square(H):
        raise ShapeError(f"expected a square matrix, got shape {H.shape}")
    if not is_symmetric(H, rtol=DEFAULTS.symmetry_tol):
        raise SymmetryError("eigendecomposition expects a symmetric matrix")
    eigenvalues, eigenvectors = eigh(H)
    return [(float(eigenvalues[k]), eigenvectors[:, k]) for k in range(eigenvalues.shape[0])]


@dataclass(frozen=True)
class TermPlan:
    """One Pauli term with its ideal expectation on the encoded state."""

    index: int
    pauli: PauliString
    weight: float
    ideal: float
    probabilities: Optional[np.ndarray] = None  # rotated-basis outcome distribution
    scores: Optional[np.ndarray] = None


@dataclass(frozen=True)
class EstimationPlan:
    """Noise- and seed-independent part of an eigenvalue estimate."""

    k: int
    lambda_exact: float
    lambda_mixed: float
    decomposition: PauliDecomposition
    circuit: Circuit
    state: Statevector
    terms: Tuple[TermPlan, ...]
    label: str = ""

    @property
    def n_qubits(self) -> int:
        return self.circuit.n_qubits

    @property
    def gate_count(self) -> int:
        return gate_count(self.circuit)

    @property
    def two_qubit_count(self) -> int:
        return self.circuit.two_qubit_count

    @property
    def sampling_ready(self) -> bool:
        return all(term.probabilities is not None for term in self.terms if not term.pauli.is_identity)


def prepare_estimation(matrix: MatrixLike, k: Optional[int] = None, sampling: bool = True) -> EstimationPlan:
    """Run the classical steps of the routine for eigenpair `k`.

    Parameters
    ----------
    matrix: PaddedMatrix or ndarray
        Real symmetric 2ⁿ x 2ⁿ matrix.
    k: int, optional
        Eigenpair index in ascending order; defaults to the maximum.
    sampling: bool, optional
        Also precompute the measurement distributions needed for shot
        sampling.

    Returns
    -------
    EstimationPlan
    """
    H = _values(matrix)
    label = matrix.label if isinstance(matrix, PaddedMatrix) else ""
    decomposition = decompose(H)
    pairs = eigendecompose(H)
    if k is None:
        k = len(pairs) - 1
    if not 0 <= k < len(pairs):
        raise ArgumentError(f"eigenpair index {k} outside [0, {len(pairs)})")
    lambda_exact, vector = pairs[k]

    circuit = synthesize_encoding(vector)
    state = apply_circuit(circuit, Statevector.zero(decomposition.n_qubits))

    terms = []
    for index, (pauli, weight) in enumerate(decomposition):
        if pauli.is_identity:
            terms.append(TermPlan(index, pauli, weight, 1.0))
            continue
        ideal = expectation_analytic(state, pauli)
        probabilities = scores = None
        if sampling:
            probabilities, scores = measurement_distribution(state, pauli)
        terms.append(TermPlan(index, pauli, weight, ideal, probabilities, scores))

    logger.info(
        f"Prepared eigenpair {k} of {label or 'matrix'}: {len(terms)} terms, {gate_count(circuit)} encoding gates"
    )
    return EstimationPlan(
        k=k,
        lambda_exact=lambda_exact,
        lambda_mixed=mixed_state_value(decomposition),
        decomposition=decomposition,
        circuit=circuit,
        state=state,
        terms=tuple(terms),
        label=label,
    )


def resonance_frequency(lam: float) -> float:
    """Return ``ω = √λ`` in rad/s.

    Raises
    ------
    DomainError
        If `lam` is negative.
    """
    if lam < 0:
        raise DomainError(f"resonance frequency undefined for negative eigenvalue {lam}")
    return float(np.sqrt(lam))


def error_metrics(lambda_max: float, lambda_est: float, lambda_mixed: float) -> Tuple[float, float, float]:
    """Return ``(ε, Δ, ε/Δ)`` for an eigenvalue estimate.

    ``ε = λ_max - λ̃`` and ``Δ = λ_max - λ_mixed``.

    Raises
    ------
    MetricUndefinedError
        If ``Δ <= 0``.
    """
    eps = lambda_max - lambda_est
    delta = lambda_max - lambda_mixed
    if not delta > 0:
        raise MetricUndefinedError(f"relative error undefined: λ_max - λ_mixed = {delta:.6g} is not positive")
    return eps, delta, eps / delta


def evaluate_plan(
    plan: EstimationPlan,
    noise: Optional[NoiseModel] = None,
    shots: Optional[int] = None,
    seed: int = DEFAULTS.seed,
) -> EigenEstimate:
    """Estimate the eigenvalue of a prepared plan.

    `shots` of None selects analytic expectations; otherwise every term is
    sampled with its own stream seeded by ``seed + term_index``.
    """
    if noise is None:
        noise = NoiseModel()
    if shots is not None:
        if shots < 1:
            raise ArgumentError(f"shots must be at least 1, got {shots}")
        if not plan.sampling_ready:
            raise ArgumentError("plan was prepared without measurement distributions")

    G, G2 = plan.gate_count, plan.two_qubit_count
    lambda_est = 0.0
    for term in plan.terms:
        if term.pauli.is_identity or shots is None:
            e_ideal = term.ideal
        else:
            e_ideal = sample_expectation(term.probabilities, term.scores, shots, seed + term.index).value
        lambda_est += term.weight * apply_global_depolarizing(e_ideal, term.pauli, noise, G, G2)

    clamped = lambda_est < 0
    if clamped:
        logger.warning(f"Noisy estimate {lambda_est:.6g} is negative; resonance frequency clamped to 0")
    omega = resonance_frequency(max(lambda_est, 0.0))

    eps = plan.lambda_exact - lambda_est
    delta = plan.lambda_exact - plan.lambda_mixed
    try:
        rel: Optional[float] = error_metrics(plan.lambda_exact, lambda_est, plan.lambda_mixed)[2]
    except MetricUndefinedError as exc:
        logger.warning(str(exc))
        rel = None

    return EigenEstimate(
        k=plan.k,
        lambda_exact=plan.lambda_exact,
        lambda_est=float(lambda_est),
        omega_est=omega,
        lambda_mixed=plan.lambda_mixed,
        eps_lambda=float(eps),
        delta_lambda=float(delta),
        rel_error=None if rel is None else float(rel),
        gate_count=G,
        shots_per_term=0 if shots is None else int(shots),
        total_terms=len(plan.terms),
        clamped=clamped,
    )


def estimate_eigenvalue(
    matrix: MatrixLike,
    k: Optional[int] = None,
    noise: Optional[NoiseModel] = None,
    shots: Optional[int] = None,
    seed: int = DEFAULTS.seed,
) -> EigenEstimate:
    """Estimate eigenvalue `k` (default: the maximum) of a padded matrix.

    Parameters
    ----------
    matrix: PaddedMatrix or ndarray
        Real symmetric 2ⁿ x 2ⁿ matrix.
    k: int, optional
        Eigenpair index in ascending order.
    noise: NoiseModel, optional
        Defaults to global depolarizing noise with the default fidelity.
    shots: int, optional
        Shots per Pauli term; None for analytic expectations.
    seed: int, optional
        Base seed of the per-term sampling streams.

    Returns
    -------
    EigenEstimate
    """
    plan = prepare_estimation(matrix, k=k, sampling=shots is not None)
    return evaluate_plan(plan, noise=noise, shots=shots, seed=seed)


if __name__ == "__main__":
    H = np.array([[2.0, -1.0], [-1.0, 2.0]])
    print(estimate_eigenvalue(H, noise=NoiseModel.noiseless()))
    print(estimate_eigenvalue(H, noise=NoiseModel.from_fidelity(0.5)))
