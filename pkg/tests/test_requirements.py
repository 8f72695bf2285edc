import numpy as np
import pytest

from nisq_modal.assessment.requirements import check_hhl_requirements, check_qpe_requirements, qpe_cost
from nisq_modal.exceptions import ArgumentError, ShapeError
from nisq_modal.models.dynamical_matrix import assemble_dynamical_matrix
from nisq_modal.models.oscillators import build_chain


def test_hhl_on_hermitian_power_of_two(two_by_two):
    checklist = check_hhl_requirements(two_by_two)
    assert checklist.hermitian and checklist.power_of_two
    assert checklist.satisfied
    assert checklist.notes == []


def test_hhl_flags_padding_and_asymmetry():
    checklist = check_hhl_requirements(assemble_dynamical_matrix(build_chain(3)).values)
    assert checklist.hermitian
    assert not checklist.power_of_two
    assert not checklist.satisfied
    assert "padded" in checklist.notes[0]

    checklist = check_hhl_requirements(np.array([[1.0, 2.0], [0.0, 1.0]]))
    assert not checklist.hermitian


def test_qpe_unitary_for_hermitian(two_by_two):
    checklist = check_qpe_requirements(two_by_two, t=0.25)
    assert checklist.unitary is True
    assert checklist.satisfied
    assert checklist.to_dict()["algorithm"] == "qpe"


def test_qpe_not_unitary_for_nilpotent():
    checklist = check_qpe_requirements(np.array([[0.0, 1.0], [0.0, 0.0]]))
    assert checklist.unitary is False
    assert not checklist.hermitian
    assert not checklist.satisfied


def test_qpe_argument_checks(two_by_two):
    with pytest.raises(ArgumentError):
        check_qpe_requirements(two_by_two, t=0.0)
    with pytest.raises(ShapeError):
        check_qpe_requirements(np.ones((2, 3)))


@pytest.mark.parametrize("m", range(1, 21))
def test_qpe_cost(m):
    assert qpe_cost(m) == (m, 2**m - 1)


def test_qpe_cost_needs_an_ancilla():
    with pytest.raises(ArgumentError):
        qpe_cost(0)
