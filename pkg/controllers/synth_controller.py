"""
Synthesis controller: generates and minimizes the decode-stage expressions.

`run_synthesis("perm")` / `run_synthesis("cancel")` return both the raw and
the minimized sum-of-products plus the number of removed terms, which the CLI
prints and the decode synthesis page shows.
"""

# Import libraries
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Union

import pandas as pd

from common.decode_pipeline import SopExpression, generate_cancel_sop, generate_perm_sop, minimize
from common.errors import DomainError

SYNTH_KINDS = ("perm", "cancel")


@dataclass(frozen=True)
class SynthesisResult:
    kind: str
    raw: SopExpression
    minimized: SopExpression

    @property
    def removed(self) -> int:
        return self.raw.term_count - self.minimized.term_count

    def text(self) -> str:
        return self.minimized.to_text()

    def frame(self) -> pd.DataFrame:
        rows = [
            {
                "output": f"{self.minimized.prefix}_{k}",
                "raw_terms": len(self.raw.outputs[k]),
                "minimized_terms": len(self.minimized.outputs[k]),
            }
            for k in self.minimized.nonempty_bits()
        ]
        return pd.DataFrame(rows, columns=["output", "raw_terms", "minimized_terms"])


_GENERATORS: Dict[str, Callable[[], SopExpression]] = {
    "perm": generate_perm_sop,
    "cancel": lambda: generate_cancel_sop(minimized=False),
}


def run_synthesis(kind: str) -> SynthesisResult:
    if kind not in SYNTH_KINDS:
        raise DomainError(f"synthesis kind must be one of {SYNTH_KINDS}, got {kind!r}")
    raw = _GENERATORS[kind]()
    return SynthesisResult(kind, raw, minimize(raw))


def write_expressions(result: SynthesisResult, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(result.text() + "\n", encoding="utf-8")
    return path
