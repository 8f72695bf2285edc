"""Assemble and pad the dynamical matrix of an oscillator system."""

from dataclasses import dataclass
from typing import Tuple, Union

import networkx as nx
import numpy as np

from ..exceptions import ShapeError, SymmetryError
from ..logging_config import get_logger
from ..utils.validation import is_symmetric
from .oscillators import OscillatorSystem

logger = get_logger(__name__)


def _frozen(values: np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=float, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class DynamicalMatrix:
    """Real symmetric mass-normalised stiffness matrix.

    Its eigenvalues are the squared angular resonance frequencies (1/s²).
    """

    values: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1] or values.shape[0] < 1:
            raise ShapeError(f"a dynamical matrix must be square and non-empty, got shape {values.shape}")
        if not is_symmetric(values, rtol=1e-12):
            raise SymmetryError("dynamical matrix is not symmetric")
        object.__setattr__(self, "values", _frozen(values))

    @property
    def dim(self) -> int:
        """Number of oscillators N."""
        return int(self.values.shape[0])


@dataclass(frozen=True)
class PaddedMatrix:
    """A dynamical matrix embedded in the top-left block of a 2ⁿ x 2ⁿ matrix."""

    values: np.ndarray
    n_qubits: int
    original_dim: int
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _frozen(self.values))

    @property
    def dim(self) -> int:
        return int(self.values.shape[0])


def qubits_for_dimension(dim: int) -> int:
    """Return ⌈log₂ dim⌉ with a minimum of one qubit."""
    if dim < 1:
        raise ShapeError(f"dimension must be positive, got {dim}")
    return max(1, (dim - 1).bit_length())


def assemble_dynamical_matrix(system: OscillatorSystem) -> DynamicalMatrix:
    """Assemble ``H = M^(-1/2) K M^(-1/2)`` for an oscillator system.

    ``K`` is the stiffness-weighted graph Laplacian of the spring network
    plus the ground stiffness of each node on the diagonal; ``M`` is the
    diagonal mass matrix.

    Parameters
    ----------
    system: OscillatorSystem
        The coupled-oscillator model.

    Returns
    -------
    DynamicalMatrix
        The dense N x N dynamical matrix.
    """
    G = system.to_graph()
    nodelist = list(range(system.n_osc))
    K = nx.laplacian_matrix(G, nodelist=nodelist, weight="stiffness").toarray().astype(float)
    K += np.diag([G.nodes[i]["ground"] for i in nodelist])

    inv_sqrt_mass = 1.0 / np.sqrt(system.masses)
    H = K * np.outer(inv_sqrt_mass, inv_sqrt_mass)
    logger.info(f"Assembled {system.n_osc}x{system.n_osc} dynamical matrix for {system.label}")
    return DynamicalMatrix(values=H, label=system.label)


def pad_to_qubit_dimension(
    matrix: Union[DynamicalMatrix, np.ndarray],
) -> Tuple[PaddedMatrix, int]:
    """Embed a dynamical matrix in a zero-padded 2ⁿ x 2ⁿ matrix.

    The padding rows and columns are zero, so the padded spectrum is the
    original one plus ``2ⁿ - N`` exact zeros and the trace is unchanged.

    Returns
    -------
    tuple of (PaddedMatrix, int)
        The padded matrix and the number of qubits ``n``.
    """
    if isinstance(matrix, DynamicalMatrix):
        label, values = matrix.label, matrix.values
    else:
        label, values = "", DynamicalMatrix(values=np.asarray(matrix, dtype=float)).values

    dim = values.shape[0]
    n_qubits = qubits_for_dimension(dim)
    size = 2**n_qubits
    padded = np.zeros((size, size), dtype=float)
    padded[:dim, :dim] = values
    return PaddedMatrix(values=padded, n_qubits=n_qubits, original_dim=dim, label=label), n_qubits


if __name__ == "__main__":
    from .oscillators import build_chain

    H = assemble_dynamical_matrix(build_chain(3))
    print(H.values)
    padded, n = pad_to_qubit_dimension(H)
    print(n, padded.values.shape)
