"""Informational requirement checks for linear-algebra quantum algorithms.

HHL needs a hermitian matrix whose dimension is a power of two (or is
padded to one).  QPE needs the unitary ``U = exp(2πi·t·A)`` of a hermitian
``A`` and costs ``m`` ancilla qubits plus ``2^m - 1`` controlled
applications of ``U`` for ``m`` bits of phase.  Neither algorithm is run
here.
"""

from typing import Tuple

import numpy as np
from scipy.linalg import expm

from ..exceptions import ArgumentError, ShapeError
from ..types import RequirementChecklist
from ..utils.validation import is_hermitian, is_power_of_two, is_square, is_unitary


def _square(matrix: np.ndarray) -> np.ndarray:
    matrix = np.asarray(matrix)
    if not is_square(matrix) or matrix.shape[0] < 1:
        raise ShapeError(f"expected a non-empty square matrix, got shape {matrix.shape}")
    return matrix


def check_hhl_requirements(matrix: np.ndarray) -> RequirementChecklist:
    """Report hermiticity and power-of-two dimension of `matrix`."""
    matrix = _square(matrix)
    hermitian = is_hermitian(matrix)
    power_of_two = is_power_of_two(matrix.shape[0])
    notes = []
    if not power_of_two:
        notes.append(f"dimension {matrix.shape[0]} must be padded to a power of two")
    if not hermitian:
        notes.append("matrix is not hermitian; eigenvalues may be complex")
    return RequirementChecklist(algorithm="hhl", hermitian=hermitian, power_of_two=power_of_two, notes=notes)


def check_qpe_requirements(matrix: np.ndarray, t: float = 1.0) -> RequirementChecklist:
    """Build ``U = exp(2πi·t·A)`` and report whether it is unitary."""
    matrix = _square(matrix)
    if not np.isfinite(t) or t == 0:
        raise ArgumentError(f"evolution time must be finite and nonzero, got {t}")
    hermitian = is_hermitian(matrix)
    U = expm(2j * np.pi * t * matrix.astype(complex))
    unitary = is_unitary(U)
    power_of_two = is_power_of_two(matrix.shape[0])
    notes = []
    if not unitary:
        notes.append("exp(2πi·t·A) is not unitary")
    if not power_of_two:
        notes.append(f"dimension {matrix.shape[0]} must be padded to a power of two")
    return RequirementChecklist(
        algorithm="qpe", hermitian=hermitian, power_of_two=power_of_two, unitary=unitary, notes=notes
    )


def qpe_cost(m: int) -> Tuple[int, int]:
    """Return ``(ancilla_qubits, u_executions) = (m, 2^m - 1)``."""
    if m < 1:
        raise ArgumentError(f"QPE needs at least one ancilla bit, got m = {m}")
    return m, (1 << m) - 1
