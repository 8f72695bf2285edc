"""Bundled registry of superconducting devices and their published metrics.

The registry is a JSON array stored next to the package, one object per
device with nullable ``qv``, ``clops_v``, ``clops_h`` and ``eplg_100q``
fields.  It is parsed once and shared read-only.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from ..exceptions import DeviceNotFoundError, RegistryParseError
from ..logging_config import get_logger
from ..types import DeviceSpec

logger = get_logger(__name__)

REGISTRY_PATH = Path(__file__).resolve().parent.parent / "data" / "ibm_devices.json"

_INT_FIELDS = ("qv", "clops_v", "clops_h")


def _parse_row(row: int, record: Any) -> DeviceSpec:
    if not isinstance(record, dict):
        raise RegistryParseError("expected an object", row=row)
    name = record.get("name")
    if not isinstance(name, str) or not name:
        raise RegistryParseError("missing device name", row=row)
    qubits = record.get("qubits")
    if not isinstance(qubits, int) or isinstance(qubits, bool) or qubits <= 0:
        raise RegistryParseError(f"{name}: qubits must be a positive integer", row=row)

    values: Dict[str, Any] = {}
    for field in _INT_FIELDS:
        value = record.get(field)
        if value is not None and (not isinstance(value, int) or isinstance(value, bool) or value <= 0):
            raise RegistryParseError(f"{name}: {field} must be a positive integer or null", row=row)
        values[field] = value
    eplg = record.get("eplg_100q")
    if eplg is not None:
        if not isinstance(eplg, (int, float)) or isinstance(eplg, bool) or not 0.0 < eplg < 1.0:
            raise RegistryParseError(f"{name}: eplg_100q must be a fraction in (0, 1) or null", row=row)
        eplg = float(eplg)
    return DeviceSpec(name=name, qubits=qubits, eplg_100q=eplg, **values)


def parse_device_registry(text: str) -> Tuple[DeviceSpec, ...]:
    """Parse registry JSON text.

    Raises
    ------
    RegistryParseError
        If the text is not a JSON array of valid device objects; the row
        number (starting at 1) is part of the message.
    """
    try:
        records = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RegistryParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(records, list):
        raise RegistryParseError("registry must be a JSON array")
    devices = tuple(_parse_row(row, record) for row, record in enumerate(records, start=1))
    names = [d.name for d in devices]
    if len(set(names)) != len(names):
        raise RegistryParseError("duplicate device names")
    return devices


@lru_cache(maxsize=None)
def _load(path: str) -> Tuple[DeviceSpec, ...]:
    devices = parse_device_registry(Path(path).read_text(encoding="utf-8"))
    logger.info(f"Loaded {len(devices)} devices from {path}")
    return devices


def load_device_registry(path: Union[str, Path, None] = None) -> Tuple[DeviceSpec, ...]:
    """Return every device of the registry, in file order."""
    return _load(str(path or REGISTRY_PATH))


def find_device(name: str, path: Union[str, Path, None] = None) -> Optional[DeviceSpec]:
    """Return the device called `name`, or None."""
    for device in load_device_registry(path):
        if device.name == name:
            return device
    return None


def get_device(name: str, path: Union[str, Path, None] = None) -> DeviceSpec:
    """Return the device called `name`.

    Raises
    ------
    DeviceNotFoundError
        If no device has that name; the message lists the known names.
    """
    device = find_device(name, path)
    if device is None:
        raise DeviceNotFoundError(name, known=(d.name for d in load_device_registry(path)))
    return device


if __name__ == "__main__":
    for device in load_device_registry():
        print(device)
