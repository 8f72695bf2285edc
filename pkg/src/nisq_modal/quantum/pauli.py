"""Pauli strings and the Pauli decomposition of real symmetric matrices.

A Pauli string on ``n`` qubits is stored as two ``n``-bit masks: ``x_mask``
marks qubits carrying X or Y, ``z_mask`` marks qubits carrying Z or Y.
Qubit ``q`` corresponds to bit ``n - 1 - q`` of a basis index, so qubit 0
is the most significant bit and the leftmost symbol of a label such as
``"IXZY"``.  With this convention a string acts on a basis state as

    P|b> = i^popcount(x & z) * (-1)^popcount(b & z) |b XOR x>

which gives traces and expectation values in O(2ⁿ) without building the
2ⁿ x 2ⁿ operator.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Tuple

import numpy as np
from scipy.linalg import hadamard

from ..config import DEFAULTS
from ..exceptions import ArgumentError, DimensionError, ShapeError, SymmetryError
from ..logging_config import get_logger
from ..utils.validation import is_square, is_symmetric, log2_dimension

logger = get_logger(__name__)

_PHASES = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)
_SYMBOLS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS = {symbol: bits for bits, symbol in _SYMBOLS.items()}


def _popcount(value: int) -> int:
    return bin(value).count("1")


def popcount(values: np.ndarray, n_bits: int) -> np.ndarray:
    """Return the number of set bits elementwise for integers below 2**n_bits."""
    values = np.asarray(values, dtype=np.int64)
    counts = np.zeros_like(values)
    for bit in range(n_bits):
        counts += (values >> bit) & 1
    return counts


def parity(values: np.ndarray, n_bits: int) -> np.ndarray:
    """Return popcount(values) mod 2 elementwise."""
    return popcount(values, n_bits) & 1


@dataclass(frozen=True, order=True)
class PauliString:
    """Tensor product of single-qubit Pauli operators in bit-mask form."""

    n_qubits: int
    x_mask: int = 0
    z_mask: int = 0

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ArgumentError("a Pauli string needs at least one qubit")
        limit = 1 << self.n_qubits
        if not (0 <= self.x_mask < limit and 0 <= self.z_mask < limit):
            raise ArgumentError(f"masks must fit in {self.n_qubits} bits")

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliString":
        return cls(n_qubits, 0, 0)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse a label such as ``"IXZY"`` (qubit 0 leftmost)."""
        n = len(label)
        if n == 0:
            raise ArgumentError("empty Pauli label")
        x_mask = z_mask = 0
        for q, symbol in enumerate(label.upper()):
            if symbol not in _BITS:
                raise ArgumentError(f"invalid Pauli symbol {symbol!r} in {label!r}")
            x, z = _BITS[symbol]
            bit = n - 1 - q
            x_mask |= x << bit
            z_mask |= z << bit
        return cls(n, x_mask, z_mask)

    @property
    def label(self) -> str:
        symbols = []
        for q in range(self.n_qubits):
            bit = self.n_qubits - 1 - q
            symbols.append(_SYMBOLS[((self.x_mask >> bit) & 1, (self.z_mask >> bit) & 1)])
        return "".join(symbols)

    @property
    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    @property
    def support_mask(self) -> int:
        """Bits of the qubits carrying a non-identity symbol."""
        return self.x_mask | self.z_mask

    @property
    def y_count(self) -> int:
        return _popcount(self.x_mask & self.z_mask)

    @property
    def global_phase(self) -> complex:
        """The factor i^popcount(x & z) shared by every row."""
        return _PHASES[self.y_count % 4]

    def to_matrix(self) -> np.ndarray:
        """Materialise the dense 2ⁿ x 2ⁿ operator (small n only)."""
        size = 1 << self.n_qubits
        rows = np.arange(size)
        cols, phases = self.row_phases(rows)
        matrix = np.zeros((size, size), dtype=complex)
        matrix[cols, rows] = phases
        return matrix

    def row_phases(self, rows: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Vectorised `pauli_row_action` over an array of basis indices."""
        rows = np.asarray(rows, dtype=np.int64)
        signs = 1 - 2 * parity(rows & self.z_mask, self.n_qubits)
        return rows ^ self.x_mask, self.global_phase * signs

    def __str__(self) -> str:
        return self.label


def pauli_row_action(pauli: PauliString, row: int) -> Tuple[int, complex]:
    """Return where `pauli` sends basis state `row` and with which phase.

    Parameters
    ----------
    pauli: PauliString
        The Pauli string.
    row: int
        A basis index in ``[0, 2ⁿ)``.

    Returns
    -------
    tuple of (int, complex)
        ``(col, phase)`` such that ``P|row> = phase |col>``; the phase is one
        of +1, -1, +i, -i.
    """
    if not 0 <= row < (1 << pauli.n_qubits):
        raise ArgumentError(f"row {row} outside the {pauli.n_qubits}-qubit basis")
    col = row ^ pauli.x_mask
    sign = -1.0 if _popcount(row & pauli.z_mask) % 2 else 1.0
    return col, sign * pauli.global_phase


@dataclass(frozen=True)
class PauliDecomposition:
    """Weighted sum of Pauli strings ``H = Σ gᵢ Pᵢ``.

    Terms are ordered with the identity first, then by ``(x_mask, z_mask)``.
    """

    n_qubits: int
    terms: Tuple[Tuple[PauliString, float], ...]

    def __post_init__(self) -> None:
        strings = [p for p, _ in self.terms]
        if len(set(strings)) != len(strings):
            raise ArgumentError("duplicate Pauli string in decomposition")
        for p, weight in self.terms:
            if p.n_qubits != self.n_qubits:
                raise ShapeError(f"term {p.label} does not act on {self.n_qubits} qubits")
            if not np.isfinite(weight):
                raise ArgumentError(f"weight of {p.label} is not finite")

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[PauliString, float]]:
        return iter(self.terms)

    def weights(self) -> Dict[str, float]:
        """Map labels to weights."""
        return {p.label: w for p, w in self.terms}

    def to_records(self) -> List[Dict[str, Any]]:
        """Return the JSON export form ``[{"pauli": ..., "weight": ...}]``."""
        return [{"pauli": p.label, "weight": float(w)} for p, w in self.terms]


def _check_operator(matrix: np.ndarray) -> int:
    matrix = np.asarray(matrix)
    if not is_square(matrix):
        raise ShapeError(f"expected a square matrix, got shape {matrix.shape}")
    ok, n_qubits = log2_dimension(matrix)
    if not ok or n_qubits < 1:
        raise DimensionError(f"matrix side {matrix.shape[0]} is not a power of two of at least 2; pad it first")
    if np.iscomplexobj(matrix) and np.max(np.abs(matrix.imag), initial=0.0) > 0:
        raise SymmetryError("decomposition expects a real symmetric matrix")
    if not is_symmetric(np.real(matrix), rtol=DEFAULTS.symmetry_tol):
        raise SymmetryError("matrix is not symmetric within tolerance")
    return n_qubits


def pauli_weight(matrix: np.ndarray, pauli: PauliString) -> float:
    """Return ``gᵢ = tr(Pᵢ H) / 2ⁿ`` for a single string.

    Only the 2ⁿ nonzero entries of ``Pᵢ`` are visited.
    """
    matrix = np.asarray(matrix, dtype=float)
    size = 1 << pauli.n_qubits
    if matrix.shape != (size, size):
        raise ShapeError(f"matrix shape {matrix.shape} does not match {pauli.n_qubits} qubits")
    rows = np.arange(size)
    cols, phases = pauli.row_phases(rows)
    # P[row, col] = phase(col) with col = row ^ x, so tr(PH) = Σ_c phase(c) H[c, c ^ x]
    trace = np.sum(phases * matrix[rows, cols])
    return float(np.real(trace)) / size


def decompose(matrix: np.ndarray, prune_tol: float = DEFAULTS.prune_tol) -> PauliDecomposition:
    """Decompose a real symmetric 2ⁿ x 2ⁿ matrix into Pauli strings.

    All 4ⁿ weights are computed.  For a fixed ``x_mask`` the sums over rows
    for every ``z_mask`` form a Walsh–Hadamard transform of the diagonal
    ``H[b, b ^ x]``, so the whole decomposition is one matrix product with
    the Sylvester Hadamard matrix.

    Parameters
    ----------
    matrix: ndarray
        Real symmetric matrix whose side is a power of two.
    prune_tol: float, optional
        Terms with ``|gᵢ| <= prune_tol`` are dropped; the identity is kept.

    Returns
    -------
    PauliDecomposition
        Identity first, then terms ordered by ``(x_mask, z_mask)``.

    Raises
    ------
    DimensionError
        If the side is not a power of two.
    SymmetryError
        If the matrix is not symmetric.
    """
    n_qubits = _check_operator(matrix)
    H = np.real(np.asarray(matrix)).astype(float)
    size = 1 << n_qubits
    basis = np.arange(size)

    # diagonals[x, b] = H[b, b ^ x]; sums[x, z] = Σ_b (-1)^popcount(b & z) H[b, b ^ x]
    diagonals = H[basis[None, :], basis[None, :] ^ basis[:, None]]
    sums = diagonals @ hadamard(size, dtype=float).T / size

    y_counts = popcount(basis[:, None] & basis[None, :], n_qubits)
    # i^y is real (±1) for even y; odd-y strings are imaginary and cannot
    # contribute to a real matrix, so their weights are exactly zero.
    real_phase = np.where(y_counts % 2 == 0, 1.0 - 2.0 * ((y_counts // 2) % 2), 0.0)
    weights = real_phase * sums

    terms: List[Tuple[PauliString, float]] = [(PauliString.identity(n_qubits), float(weights[0, 0]))]
    for x_mask in range(size):
        for z_mask in range(size):
            if x_mask == 0 and z_mask == 0:
                continue
            g = float(weights[x_mask, z_mask])
            if abs(g) > prune_tol:
                terms.append((PauliString(n_qubits, x_mask, z_mask), g))

    logger.info(f"Decomposed {size}x{size} matrix into {len(terms)} of {size * size} Pauli terms")
    return PauliDecomposition(n_qubits=n_qubits, terms=tuple(terms))


def reconstruct(decomposition: PauliDecomposition) -> np.ndarray:
    """Return ``Σ gᵢ Pᵢ`` as a dense complex matrix."""
    size = 1 << decomposition.n_qubits
    rows = np.arange(size)
    matrix = np.zeros((size, size), dtype=complex)
    for pauli, weight in decomposition:
        cols, phases = pauli.row_phases(rows)
        matrix[cols, rows] += weight * phases
    return matrix


def mixed_state_value(decomposition: PauliDecomposition) -> float:
    """Return the identity weight g₁, the eigenvalue estimate of the fully mixed state."""
    for pauli, weight in decomposition:
        if pauli.is_identity:
            return float(weight)
    return 0.0


if __name__ == "__main__":
    d = decompose(np.array([[2.0, -1.0], [-1.0, 2.0]]))
    print(d.weights())
    print(reconstruct(d).real)
    print(pauli_row_action(PauliString.from_label("Y"), 0))
