"""
Records produced by a census sweep.

A `CensusRow` is one line of the census CSV (one g-curve). A `CensusReport`
collects the rows and the terminal values printed at the end of a sweep.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List

import pandas as pd

from common.constants import CSV_COLUMNS


@dataclass(frozen=True)
class CensusRow:
        g: float
        phi: float
        omega: float
        a_last: int
        gap_to_previous_curve: float
        d_omega: float


@dataclass
class CensusReport:
        total_states: int = 0
        terminal_g: float = float("nan")
        terminal_phi: float = float("nan")
        terminal_omega: float = float("nan")
        terminal_dphi_or_domega: float = float("nan")
        terminal_d_omega: float = float("nan")
        curves_counted: int = 0
        scaled: bool = False
        termination: str = ""
        escalations: int = 0
        rows: List[CensusRow] = field(default_factory=list)

        def to_frame(self) -> pd.DataFrame:
            # Column order follows the census CSV header.
            data = [
                (r.g, r.phi, r.omega, r.a_last, r.gap_to_previous_curve, r.d_omega)
                for r in self.rows
            ]
            df = pd.DataFrame(data, columns=CSV_COLUMNS)
            return df.astype({"a": "int64"})
