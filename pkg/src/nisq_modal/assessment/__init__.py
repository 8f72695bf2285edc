"""Quantum potential assessment.

* `hardware` – EPLG, layer fidelity, gate budget and quantum volume width.
* `registry` – the bundled device table.
* `requirements` – HHL and QPE requirement checks.
* `gate` – the suitability, alternative and feasibility stages.
"""

from . import hardware  # noqa: F401
from . import registry  # noqa: F401
from . import requirements  # noqa: F401
from . import gate  # noqa: F401
