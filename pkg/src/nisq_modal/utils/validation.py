"""Matrix validation utilities.

These functions perform sanity checks on the dense matrices passed between
the modelling, decomposition and assessment layers.  Tolerances are
relative to the largest entry so that the checks behave the same for unit
chains and for stiff blade meshes.
"""

from typing import Tuple

import numpy as np


def _scale(matrix: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(matrix)))) if matrix.size else 1.0


def is_square(matrix: np.ndarray) -> bool:
    """Return True if `matrix` is a two-dimensional square array."""
    return matrix.ndim == 2 and matrix.shape[0] == matrix.shape[1]


def is_symmetric(matrix: np.ndarray, rtol: float = 1e-10) -> bool:
    """Check whether a dense real matrix is symmetric.

    Parameters
    ----------
    matrix: ndarray
        A square dense matrix.
    rtol: float, optional
        Tolerance relative to the largest absolute entry; defaults to 1e-10.

    Returns
    -------
    bool
        True if `matrix` is symmetric within tolerance; False otherwise.
    """
    matrix = np.asarray(matrix)
    if not is_square(matrix):
        return False
    return bool(np.max(np.abs(matrix - matrix.T), initial=0.0) <= rtol * _scale(matrix))


def is_hermitian(matrix: np.ndarray, atol: float = 1e-10) -> bool:
    """Check whether a dense matrix equals its conjugate transpose."""
    matrix = np.asarray(matrix)
    if not is_square(matrix):
        return False
    return bool(np.allclose(matrix, matrix.conj().T, atol=atol, rtol=0.0))


def is_unitary(matrix: np.ndarray, atol: float = 1e-10) -> bool:
    """Check whether ``U†U`` equals the identity."""
    matrix = np.asarray(matrix)
    if not is_square(matrix):
        return False
    return bool(np.allclose(matrix.conj().T @ matrix, np.eye(matrix.shape[0]), atol=atol, rtol=0.0))


def is_power_of_two(n: int) -> bool:
    """Return True for 1, 2, 4, 8, ..."""
    return n >= 1 and (n & (n - 1)) == 0


def log2_dimension(matrix: np.ndarray) -> Tuple[bool, int]:
    """Return whether the side length is a power of two, and its log₂ if so."""
    size = np.asarray(matrix).shape[0]
    if not is_power_of_two(size):
        return False, -1
    return True, size.bit_length() - 1


if __name__ == "__main__":
    A = np.array([[2.0, -1.0], [-1.0, 2.0]])
    print("symmetric:", is_symmetric(A), "hermitian:", is_hermitian(A))
    print("log2 dimension:", log2_dimension(A))
