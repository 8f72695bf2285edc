"""Oscillator models and their dynamical matrices.

* `oscillators` – chain and blade geometries, selectors and the standard ladder.
* `dynamical_matrix` – assembly of the mass-normalised stiffness matrix and padding.
"""

from . import oscillators  # noqa: F401
from . import dynamical_matrix  # noqa: F401
