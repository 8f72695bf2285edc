"""Input/output helpers for matrices, geometries, decompositions and circuits.

Dense matrices are stored as whitespace-delimited text whose first line is
``"N N"`` followed by N rows of N values; `numpy.savetxt` and
`numpy.loadtxt` are used under the hood.  Everything else is written as
UTF-8 JSON in insertion order, so reruns are byte-identical.
"""

import json
from pathlib import Path
from typing import IO, Any, Union

import numpy as np

from ..exceptions import ShapeError
from ..models.oscillators import OscillatorSystem
from ..quantum.circuit import Circuit
from ..quantum.pauli import PauliDecomposition

PathLike = Union[str, Path]


def write_matrix_text(matrix: np.ndarray, path: PathLike) -> Path:
    """Write a square matrix in the dense text format."""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {matrix.shape}")
    path = Path(path)
    n = matrix.shape[0]
    np.savetxt(path, matrix, fmt="%.17g", header=f"{n} {n}", comments="", encoding="utf-8")
    return path


def read_matrix_text(source: Union[PathLike, IO[str]]) -> np.ndarray:
    """Load a matrix written by `write_matrix_text`.

    Raises
    ------
    ShapeError
        If the header is malformed or disagrees with the data.
    """
    if isinstance(source, (str, Path)):
        lines = Path(source).read_text(encoding="utf-8").splitlines()
    else:
        lines = source.read().splitlines()
    if not lines:
        raise ShapeError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != header[1] or not header[0].isdigit():
        raise ShapeError(f"malformed matrix header {lines[0]!r}; expected 'N N'")
    n = int(header[0])
    matrix = np.loadtxt(lines[1:], dtype=float, ndmin=2)
    if matrix.shape != (n, n):
        raise ShapeError(f"header announces {n}x{n} but the data has shape {matrix.shape}")
    return matrix


def write_json(data: Any, path: PathLike) -> Path:
    path = Path(path)
    path.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return path


def write_geometry_json(system: OscillatorSystem, path: PathLike) -> Path:
    return write_json(system.to_dict(), path)


def write_decomposition_json(decomposition: PauliDecomposition, path: PathLike) -> Path:
    return write_json(decomposition.to_records(), path)


def write_circuit_json(circuit: Circuit, path: PathLike) -> Path:
    return write_json(circuit.to_records(), path)


if __name__ == "__main__":
    import io

    A = read_matrix_text(io.StringIO("2 2\n2 -1\n-1 2\n"))
    print(A)
