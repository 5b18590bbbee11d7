"""
Probability-simplex bookkeeping: HDO strength and the layout of g-curves.

A Q-qubit mixed state lives in a simplex whose 2**Q vertices are the pure
states. Each pure state owns one "chief" g-curve; the curves between two
chiefs form that pure state's vertex group, which is split into one surface
group per simplex face adjacent to the vertex. Surface groups are ordered in
g by the sum of their vertex labels.

Key functions:
    - `hdo_strength_2q`, `p_measure`, `curve_class`, `termination_lines`.
    - `build_layout(Q, curves_total, dg)` -> `CurveLayout`.
    - `locate(g, layout)` -> (vertex, surface group, offset).
    - `layout_frames(layout)` tables behind the two layout CSV dumps.

Implementation notes:
    - Positions are handled as integer curve numbers n = round(g / dg) so that
      boundaries are exact; chief k sits at n = k * curves_per_vertex_group,
      except the first chief which is the first realizable curve (g = dg).
    - Chiefs belong to surface group 1 of their vertex group (offset 0).
      Curves left over by the integer split are reported as
      `unassigned_curves` above the wrap chief. The first vertex group is one
      curve short because its chief cannot sit at g = 0.
"""

# Import libraries
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

import pandas as pd

from common.constants import CENSUS_DG_SCALED, POINTS_PER_LINE
from common.errors import CapacityError, DomainError


class CurveClass(str, Enum):
    PRIMARY = "primary"
    SECONDARY = "secondary"
    TERTIARY = "tertiary"


@dataclass(frozen=True)
class SimplexCoords:
    qubits: int
    g: float
    vertex_group: str
    surface_group: int
    offset: int
    a: int = 0
    curve_class: CurveClass = CurveClass.PRIMARY


@dataclass(frozen=True)
class CurveLayout:
    qubits: int
    curves_total: int
    dg: float
    chief_curves: Dict[str, float]
    wrap_g: float
    curves_per_vertex_group: int
    curves_per_surface_group: int
    surfaces: Dict[str, List[Tuple[str, ...]]] = field(default_factory=dict)

    @property
    def states(self) -> int:
        return 2 ** self.qubits

    @property
    def surfaces_per_vertex(self) -> int:
        return surfaces_adjacent(self.qubits)

    @property
    def unassigned_curves(self) -> int:
        return self.curves_total - self.states * self.curves_per_vertex_group

    def vertex_start(self, k: int) -> int:
        """Curve number of chief k (the first chief is the first realizable curve)."""
        return max(1, k * self.curves_per_vertex_group)


def hdo_strength_2q(deltas) -> float:
    """Strength of the 2-qubit HDO from the five edge distances de0..de4."""
    d = [float(x) for x in deltas]
    if len(d) != 5:
        raise DomainError(f"expected 5 edge distances, got {len(d)}")
    if any(x < 0 for x in d):
        raise DomainError("edge distances must be non-negative")
    return 1 - (d[0] + 0.5 * d[1] - 0.5 * d[2] + 0.5 * d[3] - 0.5 * d[4])


def p_measure(sigma: float, delta: float) -> float:
    if not sigma > 0:
        raise DomainError(f"sigma must be > 0, got {sigma}")
    if delta < 0:
        raise DomainError(f"delta must be >= 0, got {delta}")
    return min(1.0, max(0.0, (sigma - delta) / sigma))


def curve_class(a: int) -> CurveClass:
    return (CurveClass.PRIMARY, CurveClass.SECONDARY, CurveClass.TERTIARY)[a % 3]


def termination_lines(curves_per_surface_group: int = 20000, points_per_line: int = POINTS_PER_LINE) -> int:
    if points_per_line <= 0:
        raise DomainError("points_per_line must be > 0")
    return curves_per_surface_group // points_per_line


def surfaces_adjacent(qubits: int) -> int:
    """Simplex faces spanned by a vertex and two others (at least one)."""
    return max(1, math.comb(2 ** qubits - 1, 2))


def _label(state: int, qubits: int) -> str:
    return format(state, f"0{qubits}b")


def _surfaces_for(vertex: int, qubits: int) -> List[Tuple[str, ...]]:
    others = [s for s in range(2 ** qubits) if s != vertex]
    if len(others) < 2:
        faces = [tuple(sorted([vertex] + others))]
    else:
        faces = [tuple(sorted((vertex,) + pair)) for pair in itertools.combinations(others, 2)]
    # Ordered by vertex sum, ties by the labels themselves.
    faces.sort(key=lambda f: (sum(f), f))
    return [tuple(_label(s, qubits) for s in f) for f in faces]


def build_layout(qubits: int, curves_total: int, dg: float = CENSUS_DG_SCALED) -> CurveLayout:
    if qubits < 1:
        raise DomainError(f"qubits must be >= 1, got {qubits}")
    if not dg > 0:
        raise DomainError(f"dg must be > 0, got {dg}")
    states = 2 ** qubits
    surfaces = surfaces_adjacent(qubits)
    if curves_total < states:
        raise CapacityError(f"{curves_total} curves cannot host {states} chief curves")

    per_vertex = curves_total // states
    per_surface = per_vertex // surfaces
    if per_surface < 1:
        raise CapacityError(f"{curves_total} curves leave no room for {surfaces} surface groups per vertex")

    chiefs: Dict[str, float] = {}
    for k in range(states):
        chiefs[_label(k, qubits)] = max(1, k * per_vertex) * dg
    return CurveLayout(
        qubits=qubits,
        curves_total=curves_total,
        dg=dg,
        chief_curves=chiefs,
        wrap_g=states * per_vertex * dg,
        curves_per_vertex_group=per_vertex,
        curves_per_surface_group=per_surface,
        surfaces={_label(v, qubits): _surfaces_for(v, qubits) for v in range(states)},
    )


def locate(g: float, layout: CurveLayout) -> SimplexCoords:
    n = int(round(g / layout.dg))
    last = layout.states * layout.curves_per_vertex_group
    if n < 1 or n > last:
        raise DomainError(f"g={g} outside the layout range [{layout.dg}, {layout.wrap_g}]")
    if n == last:
        # Wrap chief: back to the first pure state.
        return SimplexCoords(layout.qubits, g, _label(0, layout.qubits), 1, 0)

    vertex = n // layout.curves_per_vertex_group
    within = n - layout.vertex_start(vertex)
    surface = min(within // layout.curves_per_surface_group, layout.surfaces_per_vertex - 1)
    offset = within - surface * layout.curves_per_surface_group
    return SimplexCoords(layout.qubits, g, _label(vertex, layout.qubits), surface + 1, offset)


def locate_state(g: float, a: int, layout: CurveLayout) -> SimplexCoords:
    coords = locate(g, layout)
    return SimplexCoords(
        coords.qubits, coords.g, coords.vertex_group, coords.surface_group,
        coords.offset, a=a, curve_class=curve_class(a),
    )


def surface_group_range(layout: CurveLayout, vertex: str, surface: int) -> Tuple[float, float]:
    """Half-open [g_start, g_end) of one surface group."""
    if vertex not in layout.chief_curves:
        raise DomainError(f"unknown vertex {vertex!r}")
    if not 1 <= surface <= layout.surfaces_per_vertex:
        raise DomainError(f"surface group must lie in [1, {layout.surfaces_per_vertex}]")
    k = int(vertex, 2)
    n0 = layout.vertex_start(k) + (surface - 1) * layout.curves_per_surface_group
    n1 = n0 + layout.curves_per_surface_group
    if surface == layout.surfaces_per_vertex:
        n1 = (k + 1) * layout.curves_per_vertex_group
    return n0 * layout.dg, n1 * layout.dg


def maximally_entangled_g(
    layout: CurveLayout, vertex: str, surface: int, lines_before: int = POINTS_PER_LINE
) -> float:
    """g of the maximally entangled curve, `lines_before` curves before the group end."""
    _, end = surface_group_range(layout, vertex, surface)
    return end - lines_before * layout.dg


def layout_frames(layout: CurveLayout) -> Tuple[pd.DataFrame, pd.DataFrame]:
    chiefs = pd.DataFrame(
        [(state, g) for state, g in layout.chief_curves.items()]
        + [(_label(0, layout.qubits), layout.wrap_g)],
        columns=["state", "chief_g"],
    )
    rows = []
    for vertex in layout.chief_curves:
        for surface in range(1, layout.surfaces_per_vertex + 1):
            start, end = surface_group_range(layout, vertex, surface)
            rows.append((vertex, surface, start, end))
    surfaces = pd.DataFrame(rows, columns=["vertex", "surface", "g_start", "g_end"])
    return chiefs, surfaces
