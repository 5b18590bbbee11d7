"""
Reference circuit simulator: an ensemble of pure states with chainable gates.

The ensemble keeps one entry per basis state with a non-zero amplitude, the
same bookkeeping the hardware does with its flag memory, so its size is the
number of pure states a circuit actually reaches.

Key functions:
    - `Ensemble.x / y / z / h / cx` chainable gates.
    - `Ensemble.m(q)` measurement with a seeded generator.
    - `Ensemble.get_density_matrix(q)` / `get_components(q)`.
    - `Ensemble.report_max_requirements()` peak states, gate counts and flag
      memory bits.

Notes for a new Python learner:
    - Every gate returns `self`, so `state.h(0).cx(0, 1)` reads left to right.
    - Bit strings index qubits from the left: qubit 0 is the first character
      and the most significant bit of `state_vector()`.
"""

# Import libraries
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from common.constants import AMPLITUDE_EPS, DEFAULT_SEED, PURITY_TOL
from common.errors import DomainError, EntangledQubitError

logger = logging.getLogger(__name__)

SQRT_HALF = 1 / np.sqrt(2)

GATES: Dict[str, np.ndarray] = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "h": np.array([[1, 1], [1, -1]], dtype=complex) * SQRT_HALF,
}


@dataclass(frozen=True)
class Coefficient:
    magnitude: float = 1.0
    imaginary: bool = False
    negative: bool = False

    def __post_init__(self):
        if self.magnitude < 0:
            raise DomainError(f"magnitude must be >= 0, got {self.magnitude}")

    @property
    def value(self) -> complex:
        v = complex(0, self.magnitude) if self.imaginary else complex(self.magnitude, 0)
        return -v if self.negative else v


@dataclass(frozen=True)
class PureState:
    coeff: Union[Coefficient, complex, float]
    val: str

    @property
    def amplitude(self) -> complex:
        return self.coeff.value if isinstance(self.coeff, Coefficient) else complex(self.coeff)


@dataclass
class ResourceReport:
    qubits: int
    peak_states: int
    gate_counts: Counter = field(default_factory=Counter)

    @property
    def flag_bits(self) -> int:
        return 2 ** (self.qubits + 1)

    def lines(self) -> List[str]:
        gates = ", ".join(f"{k}: {v}" for k, v in sorted(self.gate_counts.items())) or "none"
        return [
            f"qubits: {self.qubits}",
            f"max pure states: {self.peak_states}",
            f"gates: {gates}",
            f"flag memory bits: {self.flag_bits}",
        ]


class Ensemble:
    """Pure-state ensemble of a `num_qubits` register."""

    def __init__(self, state_array: Iterable[PureState], num_qubits: int, seed: int = DEFAULT_SEED):
        if num_qubits < 1:
            raise DomainError(f"num_qubits must be >= 1, got {num_qubits}")
        self.num_qubits = num_qubits
        self.states: Dict[str, complex] = {}
        for s in state_array:
            if len(s.val) != num_qubits or set(s.val) - {"0", "1"}:
                raise DomainError(f"basis label {s.val!r} is not a {num_qubits}-bit string")
            self.states[s.val] = self.states.get(s.val, 0j) + s.amplitude
        self._prune()
        if abs(self.norm() - 1) > PURITY_TOL:
            raise DomainError(f"initial amplitudes are not normalized (sum |amp|^2 = {self.norm()})")
        self.classical_bits: Dict[str, int] = {}
        self.gate_counts: Counter = Counter()
        self.peak_states = len(self.states)
        self.rng = np.random.default_rng(seed)

    @classmethod
    def basis(cls, bits: str, seed: int = DEFAULT_SEED) -> "Ensemble":
        return cls([PureState(Coefficient(1.0), bits)], num_qubits=len(bits), seed=seed)

    def __repr__(self) -> str:
        terms = " + ".join(f"({amp:.4g})|{bits}>" for bits, amp in sorted(self.states.items()))
        return f"Ensemble({terms})"

    # ---------- Bookkeeping ----------
    def norm(self) -> float:
        return float(sum(abs(a) ** 2 for a in self.states.values()))

    def _prune(self) -> None:
        self.states = {b: a for b, a in sorted(self.states.items()) if abs(a) > AMPLITUDE_EPS}

    def _check_qubit(self, qubit: int) -> None:
        if not 0 <= qubit < self.num_qubits:
            raise DomainError(f"qubit {qubit} out of range for {self.num_qubits} qubits")

    def _record(self, name: str) -> None:
        self.gate_counts[name] += 1
        self.peak_states = max(self.peak_states, len(self.states))
        logger.debug("%s -> %d pure states", name, len(self.states))

    # ---------- Gates ----------
    def _apply(self, name: str, qubit: int) -> "Ensemble":
        self._check_qubit(qubit)
        matrix = GATES[name]
        out: Dict[str, complex] = {}
        for bits, amp in self.states.items():
            b = int(bits[qubit])
            for r in (0, 1):
                factor = matrix[r, b]
                if factor == 0:
                    continue
                key = bits[:qubit] + str(r) + bits[qubit + 1:]
                out[key] = out.get(key, 0j) + factor * amp
        self.states = out
        self._prune()
        self._record(name)
        return self

    def x(self, qubit: int) -> "Ensemble":
        return self._apply("x", qubit)

    def y(self, qubit: int) -> "Ensemble":
        return self._apply("y", qubit)

    def z(self, qubit: int) -> "Ensemble":
        return self._apply("z", qubit)

    def h(self, qubit: int) -> "Ensemble":
        return self._apply("h", qubit)

    def cx(self, source: int, target: int) -> "Ensemble":
        self._check_qubit(source)
        self._check_qubit(target)
        if source == target:
            raise DomainError("cx needs distinct source and target qubits")
        out: Dict[str, complex] = {}
        for bits, amp in self.states.items():
            if bits[source] == "1":
                flipped = "1" if bits[target] == "0" else "0"
                bits = bits[:target] + flipped + bits[target + 1:]
            out[bits] = amp
        self.states = dict(sorted(out.items()))
        self._record("cx")
        return self

    # ---------- Measurement ----------
    def probability_zero(self, qubit: int) -> float:
        self._check_qubit(qubit)
        return float(sum(abs(a) ** 2 for b, a in self.states.items() if b[qubit] == "0"))

    def m(self, qubit: int, name: Optional[str] = None, outcome: Optional[int] = None) -> int:
        """
        Measure `qubit` in the computational basis.

        The outcome is 1 when a uniform draw exceeds P(0). Amplitudes that
        disagree with the outcome are dropped and the rest renormalized.
        A forced `outcome` skips the draw.
        """
        p0 = self.probability_zero(qubit)
        if outcome is None:
            u = self.rng.random()
            result = int(u > p0)
        else:
            if outcome not in (0, 1):
                raise DomainError(f"outcome must be 0 or 1, got {outcome}")
            result = outcome
        weight = p0 if result == 0 else 1 - p0
        if weight <= AMPLITUDE_EPS:
            raise DomainError(f"outcome {result} on qubit {qubit} has zero probability")

        scale = 1 / np.sqrt(weight)
        self.states = {b: a * scale for b, a in self.states.items() if b[qubit] == str(result)}
        self._prune()
        if name is not None:
            self.classical_bits[name] = result
        self._record("m")
        return result

    # ---------- Queries ----------
    def state_vector(self) -> np.ndarray:
        vec = np.zeros(2 ** self.num_qubits, dtype=complex)
        for bits, amp in self.states.items():
            vec[int(bits, 2)] = amp
        return vec

    def get_density_matrix(self, qubit: int) -> np.ndarray:
        """Reduced 2x2 density matrix of `qubit` (partial trace over the others)."""
        self._check_qubit(qubit)
        by_rest: Dict[str, np.ndarray] = {}
        for bits, amp in self.states.items():
            rest = bits[:qubit] + bits[qubit + 1:]
            by_rest.setdefault(rest, np.zeros(2, dtype=complex))[int(bits[qubit])] = amp
        rho = np.zeros((2, 2), dtype=complex)
        for v in by_rest.values():
            rho += np.outer(v, v.conj())
        return rho

    def get_components(self, qubit: int) -> Tuple[complex, complex]:
        """(alpha, beta) of an unentangled qubit, alpha real and >= 0."""
        rho = self.get_density_matrix(qubit)
        purity = float(np.trace(rho @ rho).real)
        if abs(purity - 1) > PURITY_TOL:
            raise EntangledQubitError(f"qubit {qubit} is entangled (purity {purity:.6f})")
        alpha = float(np.sqrt(max(rho[0, 0].real, 0.0)))
        if alpha <= AMPLITUDE_EPS:
            return 0j, 1 + 0j
        return complex(alpha), complex(rho[1, 0] / alpha)

    def density_matrices(self) -> List[np.ndarray]:
        return [self.get_density_matrix(q) for q in range(self.num_qubits)]

    def print_density_matrices(self) -> None:
        for q, rho in enumerate(self.density_matrices()):
            print(f"qubit {q}:")
            print(np.array2string(rho, precision=4, suppress_small=True))

    def report_max_requirements(self) -> ResourceReport:
        return ResourceReport(self.num_qubits, self.peak_states, Counter(self.gate_counts))

    def print_max_requirements(self) -> None:
        for line in self.report_max_requirements().lines():
            print(line)


def teleport(alpha: complex, beta: complex, seed: int = DEFAULT_SEED,
             outcomes: Optional[Tuple[int, int]] = None) -> Ensemble:
    """
    Teleport alpha|0> + beta|1> from qubit 2 to qubit 1.

    `outcomes` forces the two measurement results (c1 on qubit 2, c2 on
    qubit 0) to walk a chosen branch.
    """
    state = Ensemble(
        [PureState(complex(alpha), "000"), PureState(complex(beta), "001")],
        num_qubits=3, seed=seed,
    )
    state.h(0).cx(0, 1).cx(2, 0).h(2)
    forced = outcomes or (None, None)
    c1 = state.m(2, name="c1", outcome=forced[0])
    c2 = state.m(0, name="c2", outcome=forced[1])
    if c2:
        state.x(1)
    if c1:
        state.z(1)
    return state
