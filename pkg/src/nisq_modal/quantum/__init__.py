"""Statevector-level quantum primitives.

* `pauli` – bit-mask Pauli strings and the Pauli decomposition.
* `circuit` – gates, circuits, the encoding circuit and the simulator kernel.
* `measurement` – exact and sampled expectations and the noise model.
"""

from . import pauli  # noqa: F401
from . import circuit  # noqa: F401
from . import measurement  # noqa: F401
