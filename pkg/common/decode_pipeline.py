"""
Digital decode stage: from an instruction word to convolution switch settings.

An instruction word holds up to 20 groups; each group is up to 5 operations
on the same qubit. Every operation is a 4-bit op nibble (W bits) followed in
the word by a 5-bit target identifier (T bits).

Key functions:
    - `cancel_adjacent(ops)` removes adjacent repeated operations (X X = I).
    - `perm_mask(ops)` the 25 P bits selecting one convolution of distinct
      operations.
    - `generate_perm_sop()` / `generate_cancel_sop()` sum-of-products
      expressions of the P and C bits over the W bits, and `minimize(sop)`
      which drops terms subsumed by a smaller term.
    - `group_by_qubit`, `build_word`, `parse_word`, `decode_word`.

Implementation notes:
    - W bits are numbered across the concatenated nibbles of a group, 4 per
      operation (W0 is the leading bit of the first nibble). C bits are
      numbered over the printed comb string, 5 positions per operation, so
      positions 4, 9, 14, 19, 24 never carry a term.
    - A term is stored as the frozenset of W indices that must be 1; the
      minimizer works on integer bit masks.
    - Word layout: group-major, bit 0 is the most significant bit of the
      225-hex-digit string. Group k occupies 45 bits: five op nibbles then
      five 5-bit targets. A controlled operation's source identifier sits in
      the next slot's target field, and that slot's nibble holds the marker
      1111.
"""

# Import libraries
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from common.constants import (
    GROUPS_PER_WORD,
    OP_BITS,
    SLOTS_PER_GROUP,
    SOURCE_MARKER,
    TARGET_BITS,
    WORD_BITS,
)
from common.errors import CapacityError, DomainError, ModuleReuseError

logger = logging.getLogger(__name__)


class OpCode(IntEnum):
    EMPTY = 0b0000
    X = 0b0001
    Y = 0b0010
    Z = 0b0011
    M = 0b0100
    H = 0b0101

    @property
    def nibble(self) -> str:
        return format(int(self), "04b")


OPERATIONS: Tuple[OpCode, ...] = (OpCode.X, OpCode.Y, OpCode.Z, OpCode.M, OpCode.H)

# P-bit index of `op` given the operation before it (None = first position).
PERM_BIT_INDICES: Dict[OpCode, Dict[Optional[OpCode], int]] = {
    OpCode.X: {None: 0, OpCode.Y: 1, OpCode.Z: 2, OpCode.M: 3, OpCode.H: 4},
    OpCode.Y: {None: 5, OpCode.X: 6, OpCode.Z: 7, OpCode.M: 8, OpCode.H: 9},
    OpCode.Z: {None: 10, OpCode.X: 11, OpCode.Y: 12, OpCode.M: 13, OpCode.H: 14},
    OpCode.M: {None: 15, OpCode.X: 16, OpCode.Y: 17, OpCode.Z: 18, OpCode.H: 19},
    OpCode.H: {None: 20, OpCode.X: 21, OpCode.Y: 22, OpCode.Z: 23, OpCode.M: 24},
}
PERM_BITS = 25
COMB_BITS = SLOTS_PER_GROUP * (OP_BITS + 1)

Term = FrozenSet[int]


def _as_op(value) -> OpCode:
    try:
        return OpCode(value)
    except ValueError:
        raise DomainError(f"invalid op nibble {value!r}") from None


@dataclass(frozen=True)
class PermMask:
    bits: FrozenSet[int]

    def as_string(self) -> str:
        return "".join("1" if i in self.bits else "0" for i in range(PERM_BITS))

    def as_int(self) -> int:
        return int(self.as_string(), 2)


@dataclass
class SopExpression:
    """Per output bit, an ordered list of product terms over W bits."""

    prefix: str
    outputs: List[List[Term]]

    @property
    def term_count(self) -> int:
        return sum(len(terms) for terms in self.outputs)

    def nonempty_bits(self) -> List[int]:
        return [k for k, terms in enumerate(self.outputs) if terms]

    def evaluate(self, w_bits: Iterable[int]) -> List[int]:
        """Output bits for an input whose set W bits are `w_bits`."""
        on = frozenset(w_bits)
        return [int(any(term <= on for term in terms)) for terms in self.outputs]

    def line(self, k: int) -> str:
        terms = " + ".join("·".join(f"W_{j}" for j in sorted(term)) for term in self.outputs[k])
        return f"{self.prefix}_{k} = {terms}"

    def to_text(self) -> str:
        return "\n".join(self.line(k) for k in self.nonempty_bits())


@dataclass(frozen=True)
class Operation:
    op: OpCode
    target: int
    source: Optional[int] = None

    def __post_init__(self):
        if self.op is OpCode.EMPTY:
            raise DomainError("an operation needs a non-empty op code")
        for qubit in (self.target, self.source):
            if qubit is not None and not 0 <= qubit < 2 ** TARGET_BITS:
                raise DomainError(f"qubit id {qubit} does not fit {TARGET_BITS} bits")

    @property
    def slots(self) -> int:
        return 1 if self.source is None else 2


@dataclass
class DecodedGroup:
    target: int
    operations: List[Operation]
    cancelled: List[OpCode]
    convolutions: List[PermMask] = field(default_factory=list)


# ---------- Cancellation and permutation masks ----------

def cancel_adjacent(ops: Sequence) -> List[OpCode]:
    """Remove the leftmost adjacent equal pair until none is left; pad with EMPTY."""
    word = [_as_op(o) for o in ops]
    if len(word) > SLOTS_PER_GROUP:
        raise DomainError(f"a group holds at most {SLOTS_PER_GROUP} operations")
    n = 0
    while n < len(word) - 1:
        if word[n] is not OpCode.EMPTY and word[n] == word[n + 1]:
            word = word[:n] + word[n + 2:] + [OpCode.EMPTY, OpCode.EMPTY]
            n = 0
            continue
        n += 1
    return word


def perm_mask(seq: Sequence) -> PermMask:
    ops = [_as_op(o) for o in seq]
    if not 1 <= len(ops) <= len(OPERATIONS) or OpCode.EMPTY in ops:
        raise DomainError(f"a convolution takes 1 to {len(OPERATIONS)} non-empty operations")
    if len(set(ops)) != len(ops):
        raise ModuleReuseError("each module can only be used once in a convolution")
    bits = {PERM_BIT_INDICES[ops[0]][None]}
    bits.update(PERM_BIT_INDICES[op][prev] for prev, op in zip(ops, ops[1:]))
    return PermMask(frozenset(bits))


def schedule_convolutions(ops: Sequence) -> List[PermMask]:
    """Split operations into consecutive runs without repeats, one convolution each."""
    masks: List[PermMask] = []
    run: List[OpCode] = []
    for op in (_as_op(o) for o in ops):
        if op is OpCode.EMPTY:
            continue
        if op in run:
            masks.append(perm_mask(run))
            run = []
        run.append(op)
    if run:
        masks.append(perm_mask(run))
    return masks


def w_bits(ops: Sequence) -> Term:
    """W indices set by the concatenated nibbles of `ops`."""
    bits = set()
    for n, op in enumerate(ops):
        for k, ch in enumerate(_as_op(op).nibble):
            if ch == "1":
                bits.add(OP_BITS * n + k)
    return frozenset(bits)


def comb_bits(ops: Sequence) -> FrozenSet[int]:
    """C indices set by the cancelled, padded group (printed-string positions)."""
    padded = list(cancel_adjacent(ops)) + [OpCode.EMPTY] * (SLOTS_PER_GROUP - len(ops))
    bits = set()
    for n, op in enumerate(padded):
        for k, ch in enumerate(op.nibble):
            if ch == "1":
                bits.add((OP_BITS + 1) * n + k)
    return frozenset(bits)


# ---------- SOP generation and minimization ----------

def _add_term(outputs: List[List[Term]], seen: List[set], bit: int, term: Term) -> None:
    if term not in seen[bit]:
        seen[bit].add(term)
        outputs[bit].append(term)


def generate_perm_sop() -> SopExpression:
    outputs: List[List[Term]] = [[] for _ in range(PERM_BITS)]
    seen: List[set] = [set() for _ in range(PERM_BITS)]
    for length in range(2, len(OPERATIONS) + 1):
        for word in itertools.permutations(OPERATIONS, length):
            term = w_bits(word)
            for bit in sorted(perm_mask(word).bits):
                _add_term(outputs, seen, bit, term)
    return SopExpression("P", outputs)


def generate_cancel_sop(minimized: bool = True) -> SopExpression:
    outputs: List[List[Term]] = [[] for _ in range(COMB_BITS)]
    seen: List[set] = [set() for _ in range(COMB_BITS)]
    for length in range(2, SLOTS_PER_GROUP + 1):
        for word in itertools.product(OPERATIONS, repeat=length):
            term = w_bits(word)
            for bit in sorted(comb_bits(word)):
                _add_term(outputs, seen, bit, term)
    raw = SopExpression("C", outputs)
    return minimize(raw) if minimized else raw


def _mask(term: Term) -> int:
    value = 0
    for j in term:
        value |= 1 << j
    return value


def minimize(sop: SopExpression) -> SopExpression:
    """
    Drop terms that contain a smaller term of the same output.

    Each pass removes the terms that include another term but are not
    themselves included in any; passes repeat until one removes nothing.
    Term order is preserved.
    """
    outputs = [list(terms) for terms in sop.outputs]
    pass_no = 0
    while True:
        pass_no += 1
        removed = 0
        for k, terms in enumerate(outputs):
            if len(terms) < 2:
                continue
            masks = np.array([_mask(t) for t in terms], dtype=np.uint64)
            # subset[i, j]: term i is contained in term j
            subset = (masks[:, None] & ~masks[None, :]) == 0
            np.fill_diagonal(subset, False)
            drop = subset.any(axis=0) & ~subset.any(axis=1)
            if drop.any():
                for q in np.flatnonzero(drop):
                    logger.debug("redundant term %s removed from %s_%d", sorted(terms[q]), sop.prefix, k)
                outputs[k] = [t for t, d in zip(terms, drop) if not d]
                removed += int(drop.sum())
        logger.info("pass %d removed %d terms", pass_no, removed)
        if removed == 0:
            return SopExpression(sop.prefix, outputs)


# ---------- Grouping and instruction words ----------

def group_by_qubit(stream: Iterable) -> List[List[Operation]]:
    """Chunk runs of consecutive same-target operations into groups of 5 slots."""
    groups: List[List[Operation]] = []
    current: List[Operation] = []
    used = 0
    for item in stream:
        op = item if isinstance(item, Operation) else Operation(_as_op(item[0]), *item[1:])
        starts_new = bool(current) and (op.target != current[-1].target or used + op.slots > SLOTS_PER_GROUP)
        if starts_new:
            groups.append(current)
            current, used = [], 0
        current.append(op)
        used += op.slots
    if current:
        groups.append(current)
    return groups


@dataclass(frozen=True)
class InstructionWord:
    value: int = 0

    def __post_init__(self):
        if not 0 <= self.value < 2 ** WORD_BITS:
            raise DomainError(f"instruction word exceeds {WORD_BITS} bits")

    @property
    def width(self) -> int:
        return WORD_BITS

    def bit(self, index: int) -> int:
        """Bit `index` counted from the most significant end."""
        return (self.value >> (WORD_BITS - 1 - index)) & 1

    def to_hex(self) -> str:
        return format(self.value, f"0{WORD_BITS // 4}x")

    @classmethod
    def from_hex(cls, text: str) -> "InstructionWord":
        text = text.strip()
        if len(text) != WORD_BITS // 4:
            raise DomainError(f"expected {WORD_BITS // 4} hex digits, got {len(text)}")
        return cls(int(text, 16))


GROUP_BITS = SLOTS_PER_GROUP * (OP_BITS + TARGET_BITS)


def _group_slots(group: Sequence[Operation]) -> List[Tuple[int, int]]:
    slots: List[Tuple[int, int]] = []
    for op in group:
        slots.append((int(op.op), op.target))
        if op.source is not None:
            slots.append((SOURCE_MARKER, op.source))
    if len(slots) > SLOTS_PER_GROUP:
        raise CapacityError(f"group needs {len(slots)} slots, only {SLOTS_PER_GROUP} available")
    return slots + [(0, 0)] * (SLOTS_PER_GROUP - len(slots))


def build_word(groups: Sequence[Sequence[Operation]]) -> InstructionWord:
    if len(groups) > GROUPS_PER_WORD:
        raise CapacityError(f"{len(groups)} groups exceed the {GROUPS_PER_WORD}-group word")
    value = 0
    for g in range(GROUPS_PER_WORD):
        slots = _group_slots(groups[g]) if g < len(groups) else [(0, 0)] * SLOTS_PER_GROUP
        for nibble, _ in slots:
            value = (value << OP_BITS) | nibble
        for _, target in slots:
            value = (value << TARGET_BITS) | target
    return InstructionWord(value)


def parse_word(word: InstructionWord) -> List[List[Operation]]:
    groups: List[List[Operation]] = []
    for g in range(GROUPS_PER_WORD):
        shift = (GROUPS_PER_WORD - 1 - g) * GROUP_BITS
        chunk = (word.value >> shift) & (2 ** GROUP_BITS - 1)
        targets_field = chunk & (2 ** (SLOTS_PER_GROUP * TARGET_BITS) - 1)
        ops_field = chunk >> (SLOTS_PER_GROUP * TARGET_BITS)

        group: List[Operation] = []
        for s in range(SLOTS_PER_GROUP):
            nibble = (ops_field >> (OP_BITS * (SLOTS_PER_GROUP - 1 - s))) & (2 ** OP_BITS - 1)
            target = (targets_field >> (TARGET_BITS * (SLOTS_PER_GROUP - 1 - s))) & (2 ** TARGET_BITS - 1)
            if nibble == SOURCE_MARKER:
                if not group or group[-1].source is not None:
                    raise DomainError(f"group {g} slot {s}: source marker without a controlled operation")
                last = group.pop()
                group.append(Operation(last.op, last.target, target))
            elif nibble != 0:
                group.append(Operation(_as_op(nibble), target))
        if group:
            groups.append(group)
    return groups


def decode_word(word: InstructionWord) -> List[DecodedGroup]:
    decoded = []
    for group in parse_word(word):
        cancelled = [op for op in cancel_adjacent([o.op for o in group]) if op is not OpCode.EMPTY]
        decoded.append(DecodedGroup(
            target=group[0].target,
            operations=group,
            cancelled=cancelled,
            convolutions=schedule_convolutions(cancelled),
        ))
    return decoded
