"""
Oscillator device arithmetic: tolerance, scaling, capacity and flag memory.

Key functions:
    - `d_omega(spec, omega)` smallest frequency difference the device can
      tell apart at `omega` (stability in ppm).
    - `scaling_coefficient(l_b, omega_max)` stretches the last tolerable
      angle of the unscaled census onto the device bandwidth.
    - `naive_component_count`, `precision_percent`, `per_curve_precision`,
      `qubit_capacity`, `qubits_for_precision` capacity formulas.
    - `flag_memory`, `flag_addresses` sizing and addressing of the flag
      memory (two bits per pure state, 16-bit words by default).

Notes for a new Python learner:
    - Everything here is a pure function of its arguments, so results can be
      cached or computed in parallel without locks.
    - Bit shifts (`<<`, `>>`) are used for the address arithmetic because the
      hardware derives addresses by wiring, not by multiplication.
"""

# Import libraries
from __future__ import annotations

import math
from typing import Tuple

from common.constants import FLAG_WORD_WIDTH, PPM_SCALE
from common.errors import DomainError
from models.device_spec import DeviceSpec, FlagMemoryLayout


def d_omega(spec: DeviceSpec, omega: float) -> float:
    if omega < 0:
        raise DomainError(f"omega must be >= 0, got {omega}")
    # Same operation order as the census programs: ppm * (omega / 1e6).
    return spec.stability_ppm * (omega / PPM_SCALE)


def scaling_coefficient(l_b: float, omega_max: float) -> float:
    if not l_b > 0:
        raise DomainError(f"l_b must be > 0, got {l_b}")
    return omega_max / l_b


def naive_component_count(qubits: int) -> int:
    """Components a direct analog representation needs: 3 * 2**Q - 1."""
    if qubits < 0:
        raise DomainError(f"qubit count must be >= 0, got {qubits}")
    return 3 * 2 ** qubits - 1


def precision_percent(qubits: int) -> float:
    if qubits < 1:
        raise DomainError(f"qubit count must be >= 1, got {qubits}")
    return 1.0 * 2.0 ** (qubits - 20)


def per_curve_precision(states_per_curve: float) -> float:
    """Probability precision (percent) between two observables on one curve."""
    if not states_per_curve > 0:
        raise DomainError(f"states_per_curve must be > 0, got {states_per_curve}")
    return 100.0 / (2.0 * states_per_curve)


def qubit_capacity_exact(curves: int) -> float:
    if curves < 1:
        raise DomainError(f"curves must be >= 1, got {curves}")
    return math.log(curves) / math.log(2)


def qubit_capacity(curves: int) -> int:
    return int(round(qubit_capacity_exact(curves)))


def qubits_for_precision(pr: float) -> float:
    """Qubits maintainable at precision `pr` (a fraction, 0.01 = 1%)."""
    if not pr > 0:
        raise DomainError(f"precision must be > 0, got {pr}")
    return math.log(100 * pr) / math.log(2) + 20


def flag_memory(qubits: int, word_width: int = FLAG_WORD_WIDTH) -> FlagMemoryLayout:
    return FlagMemoryLayout(qubits=qubits, word_width=word_width)


def flag_addresses(state_bits: int, layout: FlagMemoryLayout) -> Tuple[int, int, int]:
    """
    Return (bit_address, word_address, offset_in_word) of a pure state's flag pair.

    The pair starts at bit `state << 1`; with 16-bit words the word holding it
    is `state >> 3`.
    """
    if not 0 <= state_bits < layout.states:
        raise DomainError(f"state {state_bits} outside [0, {layout.states})")
    bit_address = state_bits << 1
    shift = int(math.log2(layout.word_width)) - 1
    word_address = state_bits >> shift
    offset = bit_address % layout.word_width
    return bit_address, word_address, offset
