"""Central configuration for the eigenvalue estimator toolkit.

This module stores default values and constants used throughout the
package.  Centralising configuration makes it easier to adjust
parameters (such as the gate fidelity, shot counts or the suitability
thresholds) without touching the numerical logic itself.
"""

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Defaults:
    """Container for default configuration values."""

    # Unit oscillator chains (dimensionless results)
    chain_stiffness: float = 1.0
    chain_mass: float = 1.0

    # Blade presets: stiffness_e = kappa / L_e with L_e in mm
    blade_kappa: float = 1.0
    blade_chord_mm: float = 20.0
    blade_mass: float = 1.0
    blade_height_mm: float = 10.0
    blade_height_min_mm: float = 10.0
    blade_height_max_mm: float = 60.0

    # Pauli terms with |g_i| at or below this value are dropped
    prune_tol: float = 1e-12

    # Relative tolerance for the real-symmetric check
    symmetry_tol: float = 1e-10

    # Elementary gate fidelity; f**100 is roughly one half
    gate_fidelity: float = 0.993

    # Shots per Pauli term in sampled mode
    shots: int = 4096

    # Repetitions per geometry in a sweep
    chain_repetitions: int = 100
    blade_repetitions: int = 1000

    # seed_rep = seed + repetition_seed_stride * rep_index
    repetition_seed_stride: int = 10007

    # Random seed for reproducibility
    seed: int = 55

    # Suitability indicators
    suitability_min_size: int = 2**10
    suitability_min_steps: int = 10**6

    # Feasibility: circuit fidelity below this is considered noise dominated
    fidelity_floor: float = 0.5

    # Modal analyses per component in the milling use case
    assess_steps: int = 5 * 10**6

    # Standard geometry ladder
    ladder_chain_sizes: Tuple[int, ...] = (2, 4, 8, 16, 32, 64)
    ladder_blade_presets: Tuple[str, ...] = ("a", "b", "c")
    ladder_blade_heights: Tuple[float, ...] = (10.0,)
    full_blade_heights: Tuple[float, ...] = (10.0, 20.0, 30.0, 40.0, 50.0, 60.0)

    # Environment variable consulted when no seed flag is given
    seed_env_var: str = "NISQ_MODAL_SEED"


@dataclass(frozen=True)
class ReferenceHardware:
    """Gate error figures of a 27-qubit superconducting reference system."""

    qubits: int = 27
    quantum_volume: int = 64
    single_qubit_error: float = 0.00025
    two_qubit_error: float = 0.007


DEFAULTS = Defaults()
REFERENCE_HARDWARE = ReferenceHardware()


if __name__ == "__main__":
    import pprint

    pprint.pprint(DEFAULTS)
    pprint.pprint(REFERENCE_HARDWARE)
