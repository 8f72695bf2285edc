"""Coupled-oscillator systems for chain and blade geometries.

Every oscillator carries one scalar displacement degree of freedom.  Springs
couple pairs of oscillators, and ground springs tie oscillators to a fixed
boundary (the clamped ends of a chain or the root of a blade).  The blade
presets are small rectangular meshes whose vertical springs soften with the
blade height, so longer blades resonate at lower frequencies.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..config import DEFAULTS
from ..exceptions import HeightRangeError, InvalidModelError, UsageError
from ..logging_config import get_logger

logger = get_logger(__name__)

Node = Tuple[int, float]
Spring = Tuple[int, int, float]
GroundSpring = Tuple[int, float]


class Boundary(str, Enum):
    """Boundary conditions of an oscillator chain."""

    FIXED_FIXED = "fixed_fixed"
    FIXED_FREE = "fixed_free"


@dataclass(frozen=True)
class BladePreset:
    """Mesh layout of a blade preset (columns along the chord, rows along the height)."""

    columns: int
    rows: int
    tapered: bool = False


BLADE_PRESETS: Dict[str, BladePreset] = {
    "a": BladePreset(columns=3, rows=4),
    "b": BladePreset(columns=4, rows=6),
    "c": BladePreset(columns=4, rows=6, tapered=True),
}


@dataclass(frozen=True)
class OscillatorSystem:
    """Masses, springs and ground springs of a coupled-oscillator model.

    Attributes
    ----------
    nodes: tuple of (index, mass)
        Oscillators with their masses in kg.  Indices run from 0 to N-1.
    springs: tuple of (i, j, stiffness)
        Inter-node springs in N/m.  Each unordered pair appears once.
    ground_springs: tuple of (node, stiffness)
        Springs to the fixed boundary in N/m.
    label: str
        Geometry name, e.g. ``"chain:4:fixed_fixed"`` or ``"blade:a:10"``.
    height_mm: float, optional
        Blade height for blade presets.
    fixed_boundary: bool
        Whether the geometry declares fixed boundaries; if so, at least one
        ground spring is required.
    positions: tuple of (x, y), optional
        Node coordinates in mm, exported with the geometry.
    """

    nodes: Tuple[Node, ...]
    springs: Tuple[Spring, ...]
    ground_springs: Tuple[GroundSpring, ...]
    label: str
    height_mm: Optional[float] = None
    fixed_boundary: bool = True
    positions: Optional[Tuple[Tuple[float, float], ...]] = None

    def __post_init__(self) -> None:
        _validate_system(self)

    @property
    def n_osc(self) -> int:
        """Number of oscillators."""
        return len(self.nodes)

    @property
    def family(self) -> str:
        """Geometry family, the part of the label before the first colon."""
        return self.label.split(":", 1)[0]

    @property
    def masses(self) -> np.ndarray:
        """Masses ordered by node index."""
        return np.array([mass for _, mass in sorted(self.nodes)], dtype=float)

    def to_graph(self) -> nx.Graph:
        """Return the system as a NetworkX graph.

        Nodes carry ``mass`` and ``ground`` (total ground stiffness) attributes,
        edges carry ``stiffness``.
        """
        G = nx.Graph(label=self.label)
        for index, mass in self.nodes:
            G.add_node(index, mass=mass, ground=0.0)
        for node, stiffness in self.ground_springs:
            G.nodes[node]["ground"] += stiffness
        for i, j, stiffness in self.springs:
            G.add_edge(i, j, stiffness=stiffness)
        return G

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON-serialisable description of the geometry."""
        data: Dict[str, Any] = {
            "label": self.label,
            "height_mm": self.height_mm,
            "fixed_boundary": self.fixed_boundary,
            "nodes": [{"index": i, "mass": m} for i, m in self.nodes],
            "springs": [{"i": i, "j": j, "stiffness": k} for i, j, k in self.springs],
            "ground_springs": [{"node": n, "stiffness": k} for n, k in self.ground_springs],
        }
        if self.positions is not None:
            data["positions"] = [list(p) for p in self.positions]
        return data


def _validate_system(system: OscillatorSystem) -> None:
    """Raise `InvalidModelError` if the system violates an invariant."""
    indices = [index for index, _ in system.nodes]
    if not indices:
        raise InvalidModelError("an oscillator system needs at least one node")
    if sorted(indices) != list(range(len(indices))):
        raise InvalidModelError("node indices must be unique and contiguous from 0")
    if any(not mass > 0 for _, mass in system.nodes):
        raise InvalidModelError("all masses must be positive")

    n = len(indices)
    seen = set()
    for i, j, stiffness in system.springs:
        if i == j:
            raise InvalidModelError(f"spring connects node {i} to itself")
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidModelError(f"spring ({i}, {j}) references an unknown node")
        if not stiffness > 0:
            raise InvalidModelError(f"spring ({i}, {j}) has non-positive stiffness")
        pair = (min(i, j), max(i, j))
        if pair in seen:
            raise InvalidModelError(f"duplicate spring between nodes {pair[0]} and {pair[1]}")
        seen.add(pair)

    for node, stiffness in system.ground_springs:
        if not 0 <= node < n:
            raise InvalidModelError(f"ground spring references unknown node {node}")
        if not stiffness > 0:
            raise InvalidModelError(f"ground spring at node {node} has non-positive stiffness")

    if system.fixed_boundary and not system.ground_springs:
        raise InvalidModelError("a geometry with fixed boundaries needs at least one ground spring")

    if system.positions is not None and len(system.positions) != n:
        raise InvalidModelError("positions must list one coordinate pair per node")


def build_chain(
    n_osc: int,
    stiffness: float = DEFAULTS.chain_stiffness,
    mass: float = DEFAULTS.chain_mass,
    boundary: Boundary = Boundary.FIXED_FIXED,
) -> OscillatorSystem:
    """Build a linear chain of identical oscillators.

    Parameters
    ----------
    n_osc: int
        Number of oscillators; at least 2.
    stiffness: float, optional
        Stiffness of every spring in N/m.
    mass: float, optional
        Mass of every oscillator in kg.
    boundary: Boundary or str, optional
        ``fixed_fixed`` grounds both end nodes, ``fixed_free`` only node 0.

    Returns
    -------
    OscillatorSystem
        The chain, labelled ``chain:<n>:<boundary>``.

    Raises
    ------
    InvalidModelError
        If `n_osc` < 2 or a parameter is not positive.
    """
    if n_osc < 2:
        raise InvalidModelError(f"a chain needs at least 2 oscillators, got {n_osc}")
    if not stiffness > 0 or not mass > 0:
        raise InvalidModelError("chain stiffness and mass must be positive")
    try:
        boundary = Boundary(boundary)
    except ValueError as exc:
        raise InvalidModelError(f"unknown boundary condition {boundary!r}") from exc

    path = nx.path_graph(n_osc)
    nodes = tuple((i, float(mass)) for i in path.nodes())
    springs = tuple((i, j, float(stiffness)) for i, j in path.edges())
    ground: List[GroundSpring] = [(0, float(stiffness))]
    if boundary is Boundary.FIXED_FIXED:
        ground.append((n_osc - 1, float(stiffness)))

    return OscillatorSystem(
        nodes=nodes,
        springs=springs,
        ground_springs=tuple(ground),
        label=f"chain:{n_osc}:{boundary.value}",
        positions=tuple((float(i), 0.0) for i in range(n_osc)),
    )


def build_blade(
    preset: str,
    height_mm: float = DEFAULTS.blade_height_mm,
    kappa: float = DEFAULTS.blade_kappa,
    chord_mm: float = DEFAULTS.blade_chord_mm,
    mass: float = DEFAULTS.blade_mass,
) -> OscillatorSystem:
    """Build one of the blade preset meshes.

    The mesh is a ``rows x columns`` grid.  Row 0 sits on the blade root and
    every node in it is grounded.  A spring of length ``L`` (mm) has stiffness
    ``kappa / L``.  Vertical springs (and the root springs) have length
    ``height_mm / rows``; horizontal springs have the fixed length
    ``chord_mm / (columns - 1)``.  Preset ``c`` halves the vertical and root
    springs of the two outer columns.

    Parameters
    ----------
    preset: str
        ``"a"`` (3 x 4 grid, 12 oscillators), ``"b"`` or ``"c"`` (4 x 6 grid,
        24 oscillators).
    height_mm: float, optional
        Blade height between 10 and 60 mm.
    kappa: float, optional
        Stiffness constant in N·mm/m.
    chord_mm: float, optional
        Blade chord width in mm.
    mass: float, optional
        Mass of every oscillator in kg.

    Returns
    -------
    OscillatorSystem
        The blade, labelled ``blade:<preset>:<height>``.

    Raises
    ------
    HeightRangeError
        If `height_mm` is outside [10, 60].
    InvalidModelError
        If the preset is unknown.
    """
    lo, hi = DEFAULTS.blade_height_min_mm, DEFAULTS.blade_height_max_mm
    if not lo <= height_mm <= hi:
        raise HeightRangeError(f"blade height must lie in [{lo:g}, {hi:g}] mm, got {height_mm:g}")
    if preset not in BLADE_PRESETS:
        raise InvalidModelError(f"unknown blade preset {preset!r}; choose one of {sorted(BLADE_PRESETS)}")
    if not kappa > 0 or not chord_mm > 0 or not mass > 0:
        raise InvalidModelError("kappa, chord and mass must be positive")

    layout = BLADE_PRESETS[preset]
    rows, cols = layout.rows, layout.columns
    vertical_length = height_mm / rows
    horizontal_length = chord_mm / (cols - 1)
    k_vertical = kappa / vertical_length
    k_horizontal = kappa / horizontal_length

    def index(node: Tuple[int, int]) -> int:
        r, c = node
        return r * cols + c

    def column_factor(c: int) -> float:
        if layout.tapered and c in (0, cols - 1):
            return 0.5
        return 1.0

    grid = nx.grid_2d_graph(rows, cols)
    springs: List[Spring] = []
    for u, v in sorted(grid.edges(), key=lambda e: (index(e[0]), index(e[1]))):
        i, j = sorted((index(u), index(v)))
        if u[1] == v[1]:
            springs.append((i, j, k_vertical * column_factor(u[1])))
        else:
            springs.append((i, j, k_horizontal))

    ground = tuple((index((0, c)), k_vertical * column_factor(c)) for c in range(cols))
    nodes = tuple((i, float(mass)) for i in range(rows * cols))
    positions = tuple(
        (c * horizontal_length, (r + 1) * vertical_length) for r in range(rows) for c in range(cols)
    )

    system = OscillatorSystem(
        nodes=nodes,
        springs=tuple(springs),
        ground_springs=ground,
        label=f"blade:{preset}:{height_mm:g}",
        height_mm=float(height_mm),
        positions=positions,
    )
    logger.info(f"Built {system.label} with {system.n_osc} oscillators and {len(springs)} springs")
    return system


def geometry_from_selector(selector: str) -> OscillatorSystem:
    """Build a geometry from its selector string.

    Accepted forms are ``chain:N``, ``chain:N:fixed_fixed``,
    ``chain:N:fixed_free``, ``blade:P`` and ``blade:P:H`` with ``P`` one of
    ``a``, ``b``, ``c`` and ``H`` the height in mm.

    Raises
    ------
    UsageError
        If the selector is malformed or describes an invalid geometry.
    """
    parts = selector.strip().split(":")
    family = parts[0].lower()
    try:
        if family == "chain" and len(parts) in (2, 3):
            n_osc = int(parts[1])
            boundary = parts[2] if len(parts) == 3 else Boundary.FIXED_FIXED
            return build_chain(n_osc, boundary=boundary)
        if family == "blade" and len(parts) in (2, 3):
            height = float(parts[2]) if len(parts) == 3 else DEFAULTS.blade_height_mm
            return build_blade(parts[1].lower(), height)
    except ValueError as exc:
        # covers int()/float() parse failures and model/range errors alike
        raise UsageError(f"invalid geometry {selector!r}: {exc}") from exc
    raise UsageError(
        f"invalid geometry selector {selector!r}; expected chain:N[:fixed_fixed|fixed_free] or blade:a|b|c[:h]"
    )


def standard_ladder(
    chain_sizes: Sequence[int] = DEFAULTS.ladder_chain_sizes,
    heights: Optional[Sequence[float]] = None,
    presets: Sequence[str] = DEFAULTS.ladder_blade_presets,
) -> List[str]:
    """Return the selectors of the standard geometry ladder.

    Chains come first in increasing size, followed by every blade preset at
    every requested height.
    """
    if heights is None:
        heights = DEFAULTS.ladder_blade_heights
    selectors = [f"chain:{n}" for n in chain_sizes]
    selectors += [f"blade:{p}:{h:g}" for p in presets for h in heights]
    return selectors


if __name__ == "__main__":
    chain = build_chain(4)
    print(chain.label, chain.n_osc, len(chain.springs), len(chain.ground_springs))
    blade = build_blade("a", 20)
    print(blade.label, blade.n_osc)
    print(standard_ladder())
