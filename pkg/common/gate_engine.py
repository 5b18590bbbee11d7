"""
Gate semantics of the two-qubit emulator.

Gates act on two things the hardware keeps:
    - the (vertex group, surface group) pair locating the state's g-curve,
      moved by X and CNOT through fixed transition tables;
    - the phase range of the output oscillation (an index 0..255 built from
      the flag bits, see `flag_processor`), moved by Z and Y in units of
      2*pi/256 rad.

Key functions:
    - `apply_x(targets, s)`, `apply_cnot(s)`, `x1_reflection_cases()`.
    - `apply_z(targets, r)`, `apply_y(r, s, targets)`, `apply_h()`.
    - `measure_chief`, `measure_entangled`, `measure_edge_aligned`,
      `sigmoid_map` coefficient read-out relations of the M gate.
    - `gate_table_frame()`, `z_rule_frame()`, `y_rule_frame()` tables for
      CSV export and the Streamlit page.

The x1,2 table is its own table, not x1 followed by x2; the published tables
disagree on surface groups when composed. Capacitor/inductor values ride
along with the phase rules as documentation only.
"""

# Import libraries
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

import pandas as pd

from common.constants import PHASE_UNITS, SIGMOID_STEEPNESS
from common.errors import DomainError
from common.flag_processor import FlagStore, phase_range


VERTICES = ("00", "01", "10", "11")


class Target(str, Enum):
    Q1 = "q1"
    Q2 = "q2"
    BOTH = "both"


@dataclass(frozen=True)
class GroupState:
    vertex_group: str
    surface_group: int

    def __post_init__(self):
        if self.vertex_group not in VERTICES or self.surface_group not in (1, 2, 3):
            raise DomainError(f"invalid group state ({self.vertex_group!r}, {self.surface_group})")

    def __str__(self) -> str:
        return f"(|{self.vertex_group}>, {self.surface_group})"


@dataclass(frozen=True)
class Component:
    kind: str          # "capacitor" | "inductor"
    value: float
    unit: str          # "uF" | "uH"


@dataclass(frozen=True)
class PhaseShiftRule:
    low: int
    high: int
    shift: int
    component: Optional[Component] = None
    label: str = ""

    def contains(self, r: int) -> bool:
        return self.low <= r < self.high


@dataclass(frozen=True)
class HadamardComposition:
    parallel: Tuple[str, ...]
    scale: float


def _gs(v: str, s: int) -> GroupState:
    return GroupState(v, s)


GROUP_STATES: Tuple[GroupState, ...] = tuple(_gs(v, s) for v in VERTICES for s in (1, 2, 3))

# ---------- X / CNOT transition tables ----------
_X1 = {
    ("00", 1): ("10", 1), ("00", 2): ("10", 3), ("00", 3): ("10", 2),
    ("01", 1): ("11", 2), ("01", 2): ("11", 1), ("01", 3): ("11", 3),
    ("10", 1): ("00", 1), ("10", 2): ("00", 3), ("10", 3): ("00", 2),
    ("11", 1): ("01", 2), ("11", 2): ("01", 1), ("11", 3): ("01", 3),
}
_X2 = {(v, s): (v[0] + ("1" if v[1] == "0" else "0"), s) for v in VERTICES for s in (1, 2, 3)}
_X12 = {
    ("00", 1): ("11", 3), ("00", 2): ("11", 2), ("00", 3): ("11", 1),
    ("01", 1): ("10", 3), ("01", 2): ("10", 2), ("01", 3): ("10", 1),
    ("10", 1): ("01", 3), ("10", 2): ("01", 2), ("10", 3): ("01", 1),
    ("11", 1): ("00", 3), ("11", 2): ("00", 2), ("11", 3): ("00", 1),
}
_CNOT = {
    ("00", 1): ("00", 2), ("00", 2): ("00", 1), ("00", 3): ("00", 3),
    ("01", 1): ("01", 2), ("01", 2): ("01", 1), ("01", 3): ("01", 3),
    **{("10", s): ("11", s) for s in (1, 2, 3)},
    **{("11", s): ("10", s) for s in (1, 2, 3)},
}
X_TABLES: Dict[Target, Dict[Tuple[str, int], Tuple[str, int]]] = {
    Target.Q1: _X1,
    Target.Q2: _X2,
    Target.BOTH: _X12,
}

# (orig_surface, final_surface, orig_vertex, final_vertex)
_X1_REFLECTIONS = frozenset({
    (1, 1, "00", "10"),
    (1, 1, "10", "00"),
    (1, 2, "11", "01"),
    (2, 3, "00", "10"),
    (3, 3, "01", "11"),
    (3, 3, "11", "01"),
})

# ---------- Z rules ----------
_CAP_10 = Component("capacitor", 10.0, "uF")
_CAP_446 = Component("capacitor", 4.46, "uF")
_IND_446 = Component("inductor", 4.46, "uH")
_IND_10 = Component("inductor", 10.0, "uH")

Z_RULES: Dict[Target, Tuple[PhaseShiftRule, ...]] = {
    Target.BOTH: (
        PhaseShiftRule(0, 7, +40, _IND_10),
        PhaseShiftRule(7, 32, +24, _IND_446),
        PhaseShiftRule(32, 40, -24, _CAP_10),
        PhaseShiftRule(40, 256, -40, _CAP_446),
    ),
    Target.Q1: (
        PhaseShiftRule(0, 8, +136),
        PhaseShiftRule(8, 128, +120),
        PhaseShiftRule(128, 136, -120),
        PhaseShiftRule(136, 256, -136),
    ),
}

# ---------- Y i-shift table ----------
_Y_SHIFTS = (85, 83, 77, 75, 53, 51, 45, 43, -43, -45, -51, -53, -75, -77, -83, -85)
_Y_CAPS = (3.79, 3.36, 2.21, 1.85)
_Y_INDS = (24.1, 20.2, 13.3, 11.8)


def _y_component(row: int) -> Component:
    block, pos = divmod(row, 4)
    if block % 2 == 0:
        return Component("capacitor", _Y_CAPS[pos], "uF")
    return Component("inductor", _Y_INDS[pos], "uH")


def _y_label(row: int) -> str:
    bits = format(row, "04b")
    return "".join("X" + b for b in bits)


Y_RULES: Tuple[PhaseShiftRule, ...] = tuple(
    PhaseShiftRule(row, row + 1, shift, _y_component(row), _y_label(row))
    for row, shift in enumerate(_Y_SHIFTS)
)


def _target(targets) -> Target:
    try:
        return Target(targets)
    except ValueError:
        raise DomainError(f"unknown gate target {targets!r}") from None


def apply_x(targets, s: GroupState) -> GroupState:
    table = X_TABLES[_target(targets)]
    return _gs(*table[(s.vertex_group, s.surface_group)])


def apply_cnot(s: GroupState) -> GroupState:
    """CNOT with q1 as control and q2 as target."""
    return _gs(*_CNOT[(s.vertex_group, s.surface_group)])


def x1_reflection_cases() -> FrozenSet[Tuple[int, int, str, str]]:
    """Rows where x1 reverses the order of the surface groups."""
    return _X1_REFLECTIONS


def _check_range(r: int) -> None:
    if not 0 <= r < PHASE_UNITS:
        raise DomainError(f"phase range must lie in [0, {PHASE_UNITS - 1}], got {r}")


def _swap_qubit_flags(r: int) -> int:
    # Exchange the |01> and |10> flag pairs inside the 8-bit range index.
    return (r & 0b11000011) | ((r >> 2) & 0b00001100) | ((r << 2) & 0b00110000)


def _shift_by_rules(rules, r: int) -> int:
    for rule in rules:
        if rule.contains(r):
            return (r + rule.shift) % PHASE_UNITS
    raise DomainError(f"no phase rule covers range {r}")


def apply_z(targets, r: int) -> int:
    _check_range(r)
    target = _target(targets)
    if target is Target.Q2:
        return _swap_qubit_flags(_shift_by_rules(Z_RULES[Target.Q1], _swap_qubit_flags(r)))
    return _shift_by_rules(Z_RULES[target], r)


def y_row(flag_range: int) -> int:
    """Row of the i-shift table: the four negative flag bits of the range."""
    _check_range(flag_range)
    return ((flag_range >> 6 & 1) << 3) | ((flag_range >> 4 & 1) << 2) | ((flag_range >> 2 & 1) << 1) | (flag_range & 1)


def apply_y(flag_range: int, s: GroupState, targets=Target.BOTH) -> Tuple[int, GroupState]:
    """Y = iXZ: i-shift keyed on the initial flags, then X, then Z."""
    rule = Y_RULES[y_row(flag_range)]
    shifted = (flag_range + rule.shift) % PHASE_UNITS
    return apply_z(targets, shifted), apply_x(targets, s)


def apply_z_to_store(targets, store: FlagStore) -> int:
    return apply_z(targets, phase_range(store))


def apply_h() -> HadamardComposition:
    return HadamardComposition(parallel=("X", "Z"), scale=1 / math.sqrt(2))


# ---------- M gate read-out ----------

def sigmoid_map(v_a: float, c: float) -> float:
    return 1.0 / (1.0 + math.exp(-c * v_a))


def _check_p(p: float) -> None:
    if not 0 < p <= 1:
        raise DomainError(f"p must lie in (0, 1], got {p}")


def _chief_other(c_chief: float, p: float) -> Tuple[float, float]:
    if c_chief ** 2 > p:
        raise DomainError(f"chief coefficient {c_chief} exceeds sqrt(p)={math.sqrt(p)}")
    return c_chief, math.sqrt(max(0.0, (p - c_chief ** 2) / 3))


def measure_chief_sigmoid(v_a: float, v_half: float, p: float) -> Tuple[float, float]:
    """Chief read-out through the sigmoid: c = 0.1 * (2 * v_half)."""
    _check_p(p)
    if v_a < 0:
        raise DomainError(f"v_a must be >= 0, got {v_a}")
    frac = 2 * (sigmoid_map(v_a, SIGMOID_STEEPNESS * 2 * v_half) - 0.5)
    return _chief_other(0.5 + frac * (math.sqrt(p) - 0.5), p)


def measure_chief(a: int, a_half_range: int, p: float, mapping: str = "linear") -> Tuple[float, float]:
    """
    Coefficients of a state on a chief curve: c_chief^2 + 3 c_other^2 = p.

    `a` runs from 0 (maximally mixed, c_chief = 1/2) to `a_half_range`
    (pure chief state, c_chief = sqrt(p)).
    """
    _check_p(p)
    if a_half_range <= 0:
        raise DomainError(f"a_half_range must be > 0, got {a_half_range}")
    if not 0 <= a <= a_half_range:
        raise DomainError(f"a must lie in [0, {a_half_range}], got {a}")
    if mapping == "sigmoid":
        return measure_chief_sigmoid(a, 0.5, p)
    if mapping != "linear":
        raise DomainError(f"unknown mapping {mapping!r}")
    frac = a / a_half_range
    return _chief_other(0.5 + frac * (math.sqrt(p) - 0.5), p)


def measure_entangled(v_g: float, p: float) -> Tuple[float, float]:
    """Strongly entangled (edge) state: c0^2 + c1^2 = p."""
    _check_p(p)
    if not 0 <= v_g <= 50:
        raise DomainError(f"v_g must lie in [0, 50], got {v_g}")
    inv = 1 / math.sqrt(2)
    c0 = ((1 - inv) * v_g / 50 + inv) * math.sqrt(p)
    return c0, math.sqrt(max(0.0, p - c0 ** 2))


def measure_edge_aligned(a_frac: float, g_ratio: float, p: float) -> Tuple[float, float, float]:
    """Edge-aligned state: c0^2 + c1^2 + 2 c_other^2 = p."""
    _check_p(p)
    if not 0 <= a_frac <= 1 or not 0 <= g_ratio <= 1:
        raise DomainError("a_frac and g_ratio must lie in [0, 1]")
    c_other = (0.5 * a_frac + 0.5) * math.sqrt(p / 2)
    residual = math.sqrt(max(0.0, p - 2 * c_other ** 2))
    angle = g_ratio * math.pi / 2
    return residual * math.cos(angle), residual * math.sin(angle), c_other


# ---------- Tables ----------

def gate_table_frame() -> pd.DataFrame:
    rows = []
    for name, table in (("x1", _X1), ("x2", _X2), ("x12", _X12), ("cnot", _CNOT)):
        for (v, s), (fv, fs) in table.items():
            rows.append((name, v, s, fv, fs))
    return pd.DataFrame(rows, columns=["operation", "operand_vertex", "operand_surface", "final_vertex", "final_surface"])


def reflection_frame() -> pd.DataFrame:
    return pd.DataFrame(
        sorted(_X1_REFLECTIONS),
        columns=["orig_surface", "final_surface", "orig_vertex", "final_vertex"],
    )


def _rule_rows(rules) -> List[tuple]:
    rows = []
    for rule in rules:
        comp = rule.component
        rows.append((
            rule.label or f"[{rule.low}, {rule.high})",
            rule.shift,
            comp.kind if comp else "",
            comp.value if comp else float("nan"),
            comp.unit if comp else "",
        ))
    return rows


def z_rule_frame() -> pd.DataFrame:
    rows = []
    for target, rules in Z_RULES.items():
        rows += [(target.value,) + r for r in _rule_rows(rules)]
    return pd.DataFrame(rows, columns=["targets", "range", "shift_units", "component", "value", "unit"])


def y_rule_frame() -> pd.DataFrame:
    return pd.DataFrame(_rule_rows(Y_RULES), columns=["range", "shift_units", "component", "value", "unit"])
