"""Hardware metric arithmetic.

EPLG (error per layered gate) is the per-gate error implied by the
fidelity of a layer of ``n_2q`` two-qubit gates across a qubit chain:
``EPLG = 1 - LF^(1/n_2q)``.  Extrapolating it per gate gives the circuit
fidelity ``(1 - EPLG)^G`` and hence a gate budget for a fidelity floor.
"""

from math import floor, log, log2

from ..config import DEFAULTS
from ..exceptions import ArgumentError, DomainError


def eplg_from_layer_fidelity(layer_fidelity: float, n_2q: int) -> float:
    """Return ``1 - layer_fidelity**(1/n_2q)``.

    Raises
    ------
    DomainError
        If the layer fidelity is not in (0, 1].
    ArgumentError
        If ``n_2q < 1``.
    """
    if not 0.0 < layer_fidelity <= 1.0:
        raise DomainError(f"layer fidelity must lie in (0, 1], got {layer_fidelity}")
    if n_2q < 1:
        raise ArgumentError(f"n_2q must be at least 1, got {n_2q}")
    return 1.0 - layer_fidelity ** (1.0 / n_2q)


def layer_fidelity_from_eplg(eplg: float, n_2q: int) -> float:
    """Return ``(1 - eplg)**n_2q``, the inverse of `eplg_from_layer_fidelity`."""
    if not 0.0 <= eplg < 1.0:
        raise DomainError(f"EPLG must lie in [0, 1), got {eplg}")
    if n_2q < 1:
        raise ArgumentError(f"n_2q must be at least 1, got {n_2q}")
    return (1.0 - eplg) ** n_2q


def gate_budget(eplg: float, fidelity_floor: float = DEFAULTS.fidelity_floor) -> int:
    """Largest gate count whose fidelity ``(1 - eplg)^G`` stays above the floor.

    Evaluates ``floor(ln(fidelity_floor) / ln(1 - eplg))``.
    """
    if not 0.0 < eplg < 1.0:
        raise DomainError(f"EPLG must lie in (0, 1), got {eplg}")
    if not 0.0 < fidelity_floor < 1.0:
        raise ArgumentError(f"fidelity floor must lie in (0, 1), got {fidelity_floor}")
    return int(floor(log(fidelity_floor) / log(1.0 - eplg)))


def quantum_volume_width(quantum_volume: int) -> float:
    """Return ``log2 QV``, the width of the largest square circuit a device passes."""
    if quantum_volume < 1:
        raise ArgumentError(f"quantum volume must be positive, got {quantum_volume}")
    return log2(quantum_volume)
