"""
Flag processor: the imaginary/negative bits kept for every pure state.

Each pure state of the register carries a `FlagPair` saying whether its
coefficient is imaginary and whether it is negative. A flag pair is a phase
in {1, i, -1, -i}:

    (imaginary, negative)   (0,0)=+1   (1,0)=+i   (0,1)=-1   (1,1)=-i

Key functions:
    - `mul_i`, `negate` single-step truth tables.
    - `summarize(n_i, n_neg, start)` result of a batch of n_i
      multiplications by i and n_neg negations.
    - `successive_gate_count(n)` parity of repeated self-inverse gates.
    - `phase_range(store)` / `from_phase_range(index, Q)` flag word <-> range
      index of the output oscillation (Q <= 2).

Flag word layout (most significant first): pure states ascending by their
bit string, and within a pair the imaginary bit above the negative bit. For
two qubits the word reads I00 N00 I01 N01 I10 N10 I11 N11.
"""

# Import libraries
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from common.constants import QUBIT_COUNT_BITS
from common.errors import DomainError

MAX_RANGE_QUBITS = 2


@dataclass(frozen=True)
class FlagPair:
    imaginary: int = 0
    negative: int = 0

    def __post_init__(self):
        if self.imaginary not in (0, 1) or self.negative not in (0, 1):
            raise DomainError(f"flag bits must be 0 or 1, got {self}")

    @property
    def phase(self) -> int:
        """Quarter turns: 0 -> 1, 1 -> i, 2 -> -1, 3 -> -i."""
        return self.imaginary + 2 * self.negative

    @property
    def value(self) -> complex:
        return 1j ** self.phase

    @classmethod
    def from_phase(cls, phase: int) -> "FlagPair":
        phase %= 4
        return cls(imaginary=phase % 2, negative=int(phase >= 2))


def mul_i(p: FlagPair) -> FlagPair:
    return FlagPair(imaginary=1 - p.imaginary, negative=p.negative ^ p.imaginary)


def negate(p: FlagPair) -> FlagPair:
    return FlagPair(imaginary=p.imaginary, negative=1 - p.negative)


def summarize(n_i: int, n_neg: int, start: FlagPair) -> FlagPair:
    if n_i < 0 or n_neg < 0:
        raise DomainError("operation counts must be >= 0")
    return FlagPair.from_phase(start.phase + n_i + 2 * n_neg)


def successive_gate_count(n_s: int) -> int:
    """A self-inverse gate applied n_s times acts like it was applied n_s mod 2 times."""
    if n_s < 0:
        raise DomainError("gate count must be >= 0")
    return n_s % 2


class FlagStore:
    """
    Flag memory for a Q-qubit register.

    Bits are held in two numpy arrays indexed by pure state. The gate helpers
    mutate the store in place and return it so calls can be chained.
    """

    def __init__(self, qubits: int, imaginary: Optional[Iterable[int]] = None,
                 negative: Optional[Iterable[int]] = None):
        if not 1 <= qubits < 2 ** QUBIT_COUNT_BITS:
            raise DomainError(f"qubit count must fit the {QUBIT_COUNT_BITS}-bit field, got {qubits}")
        self.qubits = qubits
        size = 2 ** qubits
        self.imaginary = np.zeros(size, dtype=np.uint8) if imaginary is None else np.array(list(imaginary), dtype=np.uint8)
        self.negative = np.zeros(size, dtype=np.uint8) if negative is None else np.array(list(negative), dtype=np.uint8)
        if self.imaginary.size != size or self.negative.size != size:
            raise DomainError(f"expected {size} flag pairs")
        if (self.imaginary > 1).any() or (self.negative > 1).any():
            raise DomainError("flag bits must be 0 or 1")

    @property
    def qubit_count_field(self) -> int:
        return self.qubits

    @property
    def flag_bits(self) -> int:
        return 2 ** (self.qubits + 1)

    def __len__(self) -> int:
        return self.imaginary.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, FlagStore):
            return NotImplemented
        return (self.qubits == other.qubits
                and np.array_equal(self.imaginary, other.imaginary)
                and np.array_equal(self.negative, other.negative))

    def __repr__(self) -> str:
        return f"FlagStore(qubits={self.qubits}, word={self.word():0{self.flag_bits}b})"

    def copy(self) -> "FlagStore":
        return FlagStore(self.qubits, self.imaginary.copy(), self.negative.copy())

    def pair(self, state: int) -> FlagPair:
        return FlagPair(int(self.imaginary[state]), int(self.negative[state]))

    def set_pair(self, state: int, pair: FlagPair) -> "FlagStore":
        self.imaginary[state] = pair.imaginary
        self.negative[state] = pair.negative
        return self

    def pairs(self) -> List[FlagPair]:
        return [self.pair(s) for s in range(len(self))]

    def _select(self, states: Optional[Iterable[int]]) -> np.ndarray:
        if states is None:
            return np.arange(len(self))
        idx = np.array(list(states), dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= len(self)):
            raise DomainError("pure state index out of range")
        return idx

    # ---------- Gate actions on flags ----------
    def apply_mul_i(self, states: Optional[Iterable[int]] = None) -> "FlagStore":
        idx = self._select(states)
        im = self.imaginary[idx].copy()
        self.negative[idx] ^= im
        self.imaginary[idx] = 1 - im
        return self

    def apply_negate(self, states: Optional[Iterable[int]] = None) -> "FlagStore":
        idx = self._select(states)
        self.negative[idx] ^= 1
        return self

    def _qubit_mask(self, qubit: int) -> int:
        if not 0 <= qubit < self.qubits:
            raise DomainError(f"qubit {qubit} out of range for {self.qubits} qubits")
        # Qubit 0 is the leftmost character of the bit string.
        return 1 << (self.qubits - 1 - qubit)

    def apply_x(self, qubit: int) -> "FlagStore":
        """Interchange the flags of each pure state with its complement on `qubit`."""
        perm = np.arange(len(self)) ^ self._qubit_mask(qubit)
        self.imaginary = self.imaginary[perm]
        self.negative = self.negative[perm]
        return self

    def apply_z(self, qubit: int) -> "FlagStore":
        mask = self._qubit_mask(qubit)
        return self.apply_negate(s for s in range(len(self)) if s & mask)

    # ---------- Serialization ----------
    def word(self) -> int:
        value = 0
        for im, neg in zip(self.imaginary, self.negative):
            value = (value << 2) | (int(im) << 1) | int(neg)
        return value

    @classmethod
    def from_word(cls, word: int, qubits: int) -> "FlagStore":
        size = 2 ** qubits
        if not 0 <= word < 2 ** (2 * size):
            raise DomainError(f"flag word {word} out of range for {qubits} qubits")
        imaginary, negative = [], []
        for s in range(size):
            shift = 2 * (size - 1 - s)
            imaginary.append((word >> (shift + 1)) & 1)
            negative.append((word >> shift) & 1)
        return cls(qubits, imaginary, negative)

    def to_hex(self) -> str:
        total = self.flag_bits + QUBIT_COUNT_BITS
        value = (self.word() << QUBIT_COUNT_BITS) | self.qubits
        return format(value, f"0{-(-total // 4)}x")

    @classmethod
    def from_hex(cls, text: str) -> "FlagStore":
        value = int(text, 16)
        qubits = value & (2 ** QUBIT_COUNT_BITS - 1)
        if qubits < 1:
            raise DomainError("qubit-count field is zero")
        return cls.from_word(value >> QUBIT_COUNT_BITS, qubits)


def phase_range(store: FlagStore) -> int:
    if store.qubits > MAX_RANGE_QUBITS:
        raise DomainError(f"phase ranges are defined for at most {MAX_RANGE_QUBITS} qubits")
    return store.word()


def from_phase_range(index: int, qubits: int) -> FlagStore:
    if qubits > MAX_RANGE_QUBITS:
        raise DomainError(f"phase ranges are defined for at most {MAX_RANGE_QUBITS} qubits")
    return FlagStore.from_word(index, qubits)
