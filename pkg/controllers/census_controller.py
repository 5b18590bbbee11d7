"""
Census controller: runs a sweep for a device profile and writes its outputs.

    - `run_census(spec, scaled, dg, g0)` picks the unscaled or scaled sweep,
      calibrating C_d first when a scaled sweep is asked of a profile
      without one.
    - `write_report(report, path)` writes the CSV through a temporary file so
      a failed write leaves nothing behind.
    - `layout_outputs(Q, curves, out_dir)` the two simplex layout CSVs.
"""

# Import libraries
from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Tuple, Union

from common.constants import CENSUS_DG, CENSUS_DG_SCALED, CENSUS_G0, CSV_FLOAT_FORMAT
from common.curve_census import calibrate_cd, census_scaled, census_unscaled, emit_csv
from common.simplex_model import build_layout, layout_frames
from models.census_report import CensusReport
from models.device_spec import DeviceSpec

logger = logging.getLogger(__name__)


def run_census(
    spec: DeviceSpec,
    scaled: bool = False,
    dg: Optional[float] = None,
    track_previous_curve: bool = False,
    g0: float = CENSUS_G0,
) -> Tuple[CensusReport, DeviceSpec]:
    """Return the report and the spec it ran with (C_d filled in when calibrated)."""
    if not scaled:
        return census_unscaled(spec, g0=g0, dg=dg or CENSUS_DG), spec
    if spec.cd is None:
        logger.info("device %s has no cd, calibrating", spec.name)
        spec = calibrate_cd(spec)
    report = census_scaled(
        spec, g0=g0, dg=dg or CENSUS_DG_SCALED, track_previous_curve=track_previous_curve
    )
    return report, spec


def _replace_atomically(path: Path, write) -> Path:
    tmp = path.with_name(path.name + ".part")
    try:
        write(tmp)
        tmp.replace(path)
    finally:
        if tmp.exists():
            tmp.unlink()
    return path


def write_report(report: CensusReport, path: Union[str, Path]) -> Path:
    return _replace_atomically(Path(path), lambda p: emit_csv(report, p))


def layout_outputs(qubits: int, curves: int, out_dir: Union[str, Path], dg: float = CENSUS_DG_SCALED):
    """Write `chief_curves.csv` and `surface_groups.csv`; returns both paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    chiefs, surfaces = layout_frames(build_layout(qubits, curves, dg))
    chief_path = _replace_atomically(
        out_dir / "chief_curves.csv",
        lambda p: chiefs.to_csv(p, index=False, float_format=CSV_FLOAT_FORMAT),
    )
    surface_path = _replace_atomically(
        out_dir / "surface_groups.csv",
        lambda p: surfaces.to_csv(p, index=False, float_format=CSV_FLOAT_FORMAT),
    )
    return chief_path, surface_path
