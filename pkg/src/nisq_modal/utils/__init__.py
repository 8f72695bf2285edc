"""Utility functions.

`validation` holds the matrix checks used by every layer.  `io_matrix`
reads and writes matrix text and JSON exports; it depends on the model and
circuit types, so import it explicitly.
"""

from . import validation  # noqa: F401
