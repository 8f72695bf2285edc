import numpy as np
import pytest

from nisq_modal.exceptions import ShapeError, SymmetryError
from nisq_modal.models.dynamical_matrix import (
    DynamicalMatrix,
    assemble_dynamical_matrix,
    pad_to_qubit_dimension,
    qubits_for_dimension,
)
from nisq_modal.models.oscillators import Boundary, OscillatorSystem, build_blade, build_chain


def test_chain_two_matrix():
    H = assemble_dynamical_matrix(build_chain(2)).values
    assert np.allclose(H, [[2.0, -1.0], [-1.0, 2.0]])


@pytest.mark.parametrize("n_osc", range(2, 65))
def test_chain_spectrum_matches_closed_form(n_osc):
    H = assemble_dynamical_matrix(build_chain(n_osc)).values
    k = np.arange(1, n_osc + 1)
    expected = 4 * np.sin(k * np.pi / (2 * (n_osc + 1))) ** 2
    assert np.allclose(np.linalg.eigvalsh(H), np.sort(expected), atol=1e-9, rtol=0)


def test_fixed_free_chain_last_diagonal():
    H = assemble_dynamical_matrix(build_chain(3, boundary=Boundary.FIXED_FREE)).values
    assert np.allclose(np.diag(H), [2.0, 2.0, 1.0])


def test_mass_normalisation():
    system = OscillatorSystem(
        nodes=((0, 4.0), (1, 1.0)),
        springs=((0, 1, 2.0),),
        ground_springs=((0, 2.0),),
        label="custom",
    )
    H = assemble_dynamical_matrix(system).values
    # K = [[4, -2], [-2, 2]], M^-1/2 = diag(1/2, 1)
    assert np.allclose(H, [[1.0, -1.0], [-1.0, 2.0]])


def test_blade_matrix_is_symmetric_positive_definite():
    H = assemble_dynamical_matrix(build_blade("c", 40)).values
    assert np.allclose(H, H.T)
    assert np.linalg.eigvalsh(H).min() > 0


def test_padding_keeps_spectrum_and_trace():
    dynamical = assemble_dynamical_matrix(build_chain(3))
    padded, n_qubits = pad_to_qubit_dimension(dynamical)
    assert n_qubits == 2
    assert padded.dim == 4
    assert padded.original_dim == 3
    assert np.trace(padded.values) == pytest.approx(np.trace(dynamical.values))
    expected = sorted([0.0, 2 - np.sqrt(2), 2.0, 2 + np.sqrt(2)])
    assert np.allclose(np.linalg.eigvalsh(padded.values), expected, atol=1e-12)


def test_padding_is_a_no_op_on_powers_of_two():
    padded, n_qubits = pad_to_qubit_dimension(np.eye(8))
    assert n_qubits == 3
    assert np.array_equal(padded.values, np.eye(8))


@pytest.mark.parametrize("dim, n", [(1, 1), (2, 1), (3, 2), (4, 2), (12, 4), (24, 5), (64, 6)])
def test_qubits_for_dimension(dim, n):
    assert qubits_for_dimension(dim) == n


def test_matrix_validation():
    with pytest.raises(SymmetryError):
        DynamicalMatrix(values=np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ShapeError):
        DynamicalMatrix(values=np.ones((2, 3)))


def test_values_are_read_only():
    H = assemble_dynamical_matrix(build_chain(2))
    with pytest.raises(ValueError):
        H.values[0, 0] = 5.0


@pytest.mark.parametrize(
    "system",
    [
        build_chain(5),
        build_chain(6, boundary=Boundary.FIXED_FREE),
        build_chain(4, mass=2.5),
        build_blade("a", 10),
        build_blade("b", 35),
        build_blade("c", 60),
    ],
    ids=lambda s: s.label,
)
def test_row_sums_with_uniform_masses_are_ground_stiffness(system):
    H = assemble_dynamical_matrix(system).values
    ground = np.zeros(system.n_osc)
    for node, stiffness in system.ground_springs:
        ground[node] += stiffness
    row_sums = H.sum(axis=1)
    assert (row_sums >= -1e-12).all()
    assert np.allclose(row_sums, ground / system.masses, atol=1e-12)
