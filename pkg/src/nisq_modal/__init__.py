"""Classical simulator of a hybrid eigenvalue estimator for modal analysis.

This package builds coupled-oscillator models (chains and blade meshes),
decomposes their dynamical matrices into Pauli strings, simulates the
amplitude-encoding circuit and the Pauli measurements on a statevector,
and reassembles noisy eigenvalue estimates.  A small assessment layer
checks whether a problem is worth running on a given quantum device.  See
README.md for usage.
"""

from . import config  # noqa: F401
from . import exceptions  # noqa: F401
from . import logging_config  # noqa: F401
from . import types  # noqa: F401
