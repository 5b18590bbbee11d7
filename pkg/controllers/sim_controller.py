"""
Simulator controller: circuit description files and seeded trial runs.

Circuit files are line based, one instruction per line:

    qubits 3          register size (first instruction)
    init 001          optional starting basis state (default all zeros)
    h 0 / x q / y q / z q
    cx 0 1            source, target
    m 2 -> c1         measure into a named classical bit
    if c1 z 1         apply a single-qubit gate when bit c1 is 1
    density 1         report the reduced density matrix of a qubit
    # comment

Key functions:
    - `parse_circuit(text)` -> `Circuit` (raises `CircuitSyntaxError`).
    - `run_circuit(circuit, seed)` -> `CircuitResult`.
    - `run_trials(circuit, seed, trials)` -> outcome frequency table.
"""

# Import libraries
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from common.circuit_sim import Ensemble
from common.constants import DEFAULT_SEED
from common.errors import CircuitSyntaxError, DomainError

logger = logging.getLogger(__name__)

SINGLE_QUBIT_GATES = ("h", "x", "y", "z")
MAX_QUBITS = 24

Instruction = Tuple  # ("h", q) | ("cx", s, t) | ("m", q, name) | ("if", name, gate, q)


@dataclass
class Circuit:
    qubits: int
    init: str
    instructions: List[Instruction] = field(default_factory=list)
    density_qubits: List[int] = field(default_factory=list)

    @property
    def classical_bits(self) -> List[str]:
        return [ins[2] for ins in self.instructions if ins[0] == "m" and ins[2] is not None]


@dataclass
class CircuitResult:
    ensemble: Ensemble
    bits: Dict[str, int]
    densities: Dict[int, np.ndarray]


def _qubit(token: str, qubits: int, line_no: int, line: str) -> int:
    try:
        q = int(token)
    except ValueError:
        raise CircuitSyntaxError(line_no, line, f"qubit index {token!r} is not an integer") from None
    if not 0 <= q < qubits:
        raise CircuitSyntaxError(line_no, line, f"qubit {q} out of range for {qubits} qubits")
    return q


def parse_circuit(text: str) -> Circuit:
    circuit: Optional[Circuit] = None
    names: set = set()
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        word = tokens[0].lower()

        if circuit is None:
            if word != "qubits" or len(tokens) != 2 or not tokens[1].isdigit():
                raise CircuitSyntaxError(line_no, line, "circuit must start with 'qubits N'")
            n = int(tokens[1])
            if not 1 <= n <= MAX_QUBITS:
                raise CircuitSyntaxError(line_no, line, f"qubit count must lie in [1, {MAX_QUBITS}]")
            circuit = Circuit(qubits=n, init="0" * n)
            continue

        q = circuit.qubits
        if word == "qubits":
            raise CircuitSyntaxError(line_no, line, "register size given twice")
        elif word == "init":
            if len(tokens) != 2 or len(tokens[1]) != q or set(tokens[1]) - {"0", "1"}:
                raise CircuitSyntaxError(line_no, line, f"init needs a {q}-bit string")
            if circuit.instructions:
                raise CircuitSyntaxError(line_no, line, "init must come before any gate")
            circuit.init = tokens[1]
        elif word in SINGLE_QUBIT_GATES:
            if len(tokens) != 2:
                raise CircuitSyntaxError(line_no, line, f"'{word}' takes one qubit")
            circuit.instructions.append((word, _qubit(tokens[1], q, line_no, line)))
        elif word == "cx":
            if len(tokens) != 3:
                raise CircuitSyntaxError(line_no, line, "'cx' takes a source and a target")
            s, t = (_qubit(tok, q, line_no, line) for tok in tokens[1:])
            if s == t:
                raise CircuitSyntaxError(line_no, line, "source and target must differ")
            circuit.instructions.append(("cx", s, t))
        elif word == "m":
            if len(tokens) == 2:
                name = None
            elif len(tokens) == 4 and tokens[2] == "->":
                name = tokens[3]
                names.add(name)
            else:
                raise CircuitSyntaxError(line_no, line, "expected 'm q' or 'm q -> name'")
            circuit.instructions.append(("m", _qubit(tokens[1], q, line_no, line), name))
        elif word == "if":
            if len(tokens) != 4 or tokens[2].lower() not in SINGLE_QUBIT_GATES:
                raise CircuitSyntaxError(line_no, line, "expected 'if name gate q'")
            if tokens[1] not in names:
                raise CircuitSyntaxError(line_no, line, f"classical bit {tokens[1]!r} is not measured before use")
            circuit.instructions.append(("if", tokens[1], tokens[2].lower(), _qubit(tokens[3], q, line_no, line)))
        elif word == "density":
            if len(tokens) != 2:
                raise CircuitSyntaxError(line_no, line, "'density' takes one qubit")
            circuit.density_qubits.append(_qubit(tokens[1], q, line_no, line))
        else:
            raise CircuitSyntaxError(line_no, line, f"unknown instruction {word!r}")

    if circuit is None:
        raise CircuitSyntaxError(0, "", "empty circuit")
    return circuit


def load_circuit(path: Union[str, Path]) -> Circuit:
    return parse_circuit(Path(path).read_text(encoding="utf-8"))


def run_circuit(circuit: Circuit, seed: int = DEFAULT_SEED,
                initial: Optional[Ensemble] = None) -> CircuitResult:
    """Run once; `initial` replaces the `init` basis state (same register size)."""
    state = initial if initial is not None else Ensemble.basis(circuit.init, seed=seed)
    if state.num_qubits != circuit.qubits:
        raise DomainError(f"initial state has {state.num_qubits} qubits, circuit needs {circuit.qubits}")
    for ins in circuit.instructions:
        kind = ins[0]
        if kind in SINGLE_QUBIT_GATES:
            getattr(state, kind)(ins[1])
        elif kind == "cx":
            state.cx(ins[1], ins[2])
        elif kind == "m":
            state.m(ins[1], name=ins[2])
        elif kind == "if" and state.classical_bits.get(ins[1]) == 1:
            getattr(state, ins[2])(ins[3])
    densities = {q: state.get_density_matrix(q) for q in circuit.density_qubits}
    return CircuitResult(state, dict(state.classical_bits), densities)


def run_trials(circuit: Circuit, seed: int = DEFAULT_SEED, trials: int = 1) -> pd.DataFrame:
    """Rerun with seeds seed .. seed + trials - 1; one row per observed outcome."""
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    names = circuit.classical_bits
    counts: Counter = Counter()
    for k in range(trials):
        bits = run_circuit(circuit, seed=seed + k).bits
        counts["".join(str(bits[n]) for n in names)] += 1
    logger.info("%d trials, %d distinct outcomes", trials, len(counts))

    rows = [{"outcome": o, "count": c, "frequency": c / trials} for o, c in sorted(counts.items())]
    frame = pd.DataFrame(rows, columns=["outcome", "count", "frequency"])
    frame.attrs["bits"] = names
    return frame


def equal_bits_frequency(frame: pd.DataFrame) -> float:
    """Share of trials whose classical bits all agree."""
    equal = frame["outcome"].map(lambda o: len(set(o)) <= 1)
    return int(frame.loc[equal, "count"].sum()) / int(frame["count"].sum())


def result_frame(result: CircuitResult) -> pd.DataFrame:
    return pd.DataFrame([result.bits]) if result.bits else pd.DataFrame()
