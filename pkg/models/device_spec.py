"""
Small data models for an oscillator device and its flag memory.

Both classes are frozen (immutable) so a profile loaded once can be shared by
the census, the CLI and the Streamlit pages without accidental modification.

`DeviceSpec` fields mirror the keys of a device profile file:
    - `stability_ppm` (parts per million), `omega_max` (Hz, key
      `omega_max_hz`), `cd` (scaling coefficient, optional until calibrated).

`FlagMemoryLayout` describes the memory that holds two flag bits per pure
state plus the 5-bit qubit-count field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

from common.constants import FLAG_WORD_WIDTH, QUBIT_COUNT_BITS
from common.errors import DomainError


@dataclass(frozen=True)
class DeviceSpec:
        name: str
        stability_ppm: float
        omega_max: float
        cd: Optional[float] = None
        description: str = ""

        def __post_init__(self):
            if not self.stability_ppm >= 0:
                raise DomainError(f"stability_ppm must be >= 0, got {self.stability_ppm}")
            if not self.omega_max > 0:
                raise DomainError(f"omega_max must be > 0, got {self.omega_max}")
            if self.cd is not None and not self.cd > 0:
                raise DomainError(f"cd must be > 0, got {self.cd}")

        def with_cd(self, cd: float) -> "DeviceSpec":
            return replace(self, cd=float(cd))


@dataclass(frozen=True)
class FlagMemoryLayout:
        qubits: int
        word_width: int = FLAG_WORD_WIDTH
        qubit_count_field_bits: int = QUBIT_COUNT_BITS
        flag_bits: int = field(init=False)

        def __post_init__(self):
            if self.qubits < 1:
                raise DomainError(f"qubits must be >= 1, got {self.qubits}")
            if self.word_width < 2 or self.word_width & (self.word_width - 1):
                raise DomainError(f"word_width must be a power of two >= 2, got {self.word_width}")
            object.__setattr__(self, "flag_bits", 2 ** (self.qubits + 1))

        @property
        def states(self) -> int:
            return 2 ** self.qubits

        @property
        def total_bits(self) -> int:
            return self.flag_bits + self.qubit_count_field_bits

        @property
        def flag_bytes(self) -> int:
            return self.flag_bits // 8 if self.flag_bits >= 8 else 1

        @property
        def words_required(self) -> int:
            return math.ceil(self.total_bits / self.word_width)
