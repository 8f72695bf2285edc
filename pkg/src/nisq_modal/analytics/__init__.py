"""Eigenvalue estimation and repeated sweeps.

* `estimator` – the four-step hybrid routine and its error metrics.
* `sweep` – repetitions over many geometries and table export.
"""

from . import estimator  # noqa: F401
from . import sweep  # noqa: F401
