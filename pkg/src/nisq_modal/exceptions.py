"""Exception hierarchy for the eigenvalue estimator toolkit.

Every error raised on purpose by this package derives from
`NisqModalError` and carries a short machine-readable `code`.  The
subclasses also inherit from the builtin exception a caller would expect
(`ValueError` for bad inputs, `LookupError` for missing registry entries),
so code that only knows about the builtins keeps working.
"""

from typing import Iterable, Optional


class NisqModalError(Exception):
    """Base class for all errors raised by `nisq_modal`."""

    code = "error"


class InvalidModelError(NisqModalError, ValueError):
    """An oscillator system violates its structural invariants."""

    code = "invalid-model"


class HeightRangeError(NisqModalError, ValueError):
    """A blade height lies outside the supported range."""

    code = "range"


class DimensionError(NisqModalError, ValueError):
    """A matrix dimension is not a power of two where one is required."""

    code = "dimension"


class SymmetryError(NisqModalError, ValueError):
    """A matrix expected to be real symmetric is not."""

    code = "symmetry"


class EncodingError(NisqModalError, ValueError):
    """A vector cannot be amplitude encoded."""

    code = "encoding"


class ShapeError(NisqModalError, ValueError):
    """Operands have incompatible shapes or qubit counts."""

    code = "shape"


class ArgumentError(NisqModalError, ValueError):
    """A scalar argument is outside its admissible range."""

    code = "argument"


class DomainError(NisqModalError, ValueError):
    """A mathematical function was called outside its domain."""

    code = "domain"


class MetricUndefinedError(NisqModalError, ValueError):
    """The relative eigenvalue error is undefined for the given inputs."""

    code = "metric-undefined"


class InsufficientDataError(NisqModalError, ValueError):
    """A device lacks the data needed for a feasibility verdict."""

    code = "insufficient-data"


class UsageError(NisqModalError, ValueError):
    """A command-line value could not be parsed."""

    code = "usage"


class RegistryParseError(NisqModalError, ValueError):
    """The bundled device registry is malformed."""

    code = "parse"

    def __init__(self, message: str, row: Optional[int] = None) -> None:
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class DeviceNotFoundError(NisqModalError, LookupError):
    """A device name is not present in the registry."""

    code = "lookup"

    def __init__(self, name: str, known: Iterable[str] = ()) -> None:
        self.name = name
        self.known = sorted(known)
        message = f"unknown device {name!r}"
        if self.known:
            message += f"; known devices: {', '.join(self.known)}"
        super().__init__(message)
