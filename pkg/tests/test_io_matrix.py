import io
import json

import numpy as np
import pytest

from nisq_modal.exceptions import ShapeError
from nisq_modal.models.dynamical_matrix import assemble_dynamical_matrix
from nisq_modal.models.oscillators import build_blade, build_chain
from nisq_modal.quantum.circuit import synthesize_encoding
from nisq_modal.quantum.pauli import decompose
from nisq_modal.utils.io_matrix import (
    read_matrix_text,
    write_circuit_json,
    write_decomposition_json,
    write_geometry_json,
    write_matrix_text,
)


def test_matrix_text_round_trip(tmp_path):
    matrix = assemble_dynamical_matrix(build_blade("a", 25)).values
    path = write_matrix_text(matrix, tmp_path / "blade.txt")
    n = matrix.shape[0]
    assert path.read_text(encoding="utf-8").splitlines()[0] == f"{n} {n}"
    assert np.array_equal(read_matrix_text(path), matrix)


def test_read_matrix_from_handle():
    matrix = read_matrix_text(io.StringIO("2 2\n2 -1\n-1 2\n"))
    assert np.array_equal(matrix, [[2.0, -1.0], [-1.0, 2.0]])


def test_single_entry_matrix(tmp_path):
    path = write_matrix_text(np.array([[4.0]]), tmp_path / "one.txt")
    assert read_matrix_text(path).shape == (1, 1)


@pytest.mark.parametrize("text", ["", "2 3\n1 2 3\n4 5 6\n", "two two\n", "3 3\n1 2\n3 4\n"])
def test_read_rejects_bad_files(text):
    with pytest.raises(ShapeError):
        read_matrix_text(io.StringIO(text))


def test_write_rejects_non_square(tmp_path):
    with pytest.raises(ShapeError):
        write_matrix_text(np.ones((2, 3)), tmp_path / "bad.txt")


def test_geometry_json(tmp_path):
    chain = build_chain(3)
    data = json.loads(write_geometry_json(chain, tmp_path / "chain.json").read_text(encoding="utf-8"))
    assert data["label"] == chain.label
    assert len(data["nodes"]) == 3
    assert data == chain.to_dict()


def test_decomposition_and_circuit_json(tmp_path, two_by_two):
    records = json.loads(write_decomposition_json(decompose(two_by_two), tmp_path / "d.json").read_text())
    assert records == [{"pauli": "I", "weight": 2.0}, {"pauli": "X", "weight": -1.0}]

    circuit = synthesize_encoding(np.array([1.0, -1.0]) / np.sqrt(2))
    gates = json.loads(write_circuit_json(circuit, tmp_path / "c.json").read_text())
    assert len(gates) == 1
    assert gates[0]["qubits"] == [0]
    assert gates[0]["angle"] == pytest.approx(-np.pi / 2)
