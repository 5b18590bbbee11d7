"""
State census: how many indices each g-curve can hold within device tolerance.

Key functions:
    - `count_states_on_curve(g, spec, scaled)` walks a = 1, 2, ... on one
      curve and accepts an index while its value stays more than one
      tolerance below the previous accepted value.
    - `census_unscaled(spec)` sweeps g upward in angle space and stops when
      the terminal angles of adjacent curves come closer than the tolerance.
    - `census_scaled(spec)` sweeps in frequency space (omega = phi * C_d),
      widens dg when curves collapse into each other, and stops at the
      device's maximum frequency.
    - `calibrate_cd(spec)` derives C_d from the unscaled sweep.
    - `emit_csv(report, path)` / `summary_lines(report)` outputs.

Implementation notes:
    - Indices are encoded in numpy batches; acceptance is still decided in
      index order, exactly as a one-at-a-time loop would.
    - g is accumulated with `g += dg` (not computed from a curve number) so
      the terminal g carries the same floating drift as the reference runs.
    - In the scaled sweep the previous-curve frequency stays at 0 unless
      `track_previous_curve=True`; the published totals were produced that
      way (the printed "d omega" equals omega itself).
"""

# Import libraries
from __future__ import annotations

import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from common.constants import (
    CENSUS_CHUNK,
    CENSUS_DG,
    CENSUS_DG_SCALED,
    CENSUS_G0,
    CENSUS_MAX_A,
    CENSUS_MAX_CURVES,
    CENSUS_MAX_RETRIES,
    CSV_FLOAT_FORMAT,
    PPM_SCALE,
)
from common.device_model import scaling_coefficient
from common.errors import CapacityError, DomainError
from common.pspectrum_codec import encode_phi_array
from models.census_report import CensusReport, CensusRow
from models.device_spec import DeviceSpec

logger = logging.getLogger(__name__)


def count_states_on_curve(
    g: float,
    spec: DeviceSpec,
    scaled: bool = False,
    chunk: int = CENSUS_CHUNK,
) -> Tuple[int, float, float, int]:
    """
    Count tolerable indices on curve `g`.

    Returns (count, phi, d_omega, a) where the last three belong to the first
    rejected index.
    """
    if not g > 0:
        raise DomainError(f"g must be > 0, got {g}")
    if scaled and spec.cd is None:
        raise DomainError(f"device {spec.name!r} has no scaling coefficient")

    count = 0
    previous: Optional[float] = None
    start = 1
    while start <= CENSUS_MAX_A:
        a = np.arange(start, start + chunk, dtype=np.int64)
        phi = encode_phi_array(a, g)
        value = phi * spec.cd if scaled else phi
        tol = spec.stability_ppm * (value / PPM_SCALE)

        keep = np.flatnonzero(~np.isnan(phi))
        if keep.size:
            v = value[keep]
            prev = np.empty_like(v)
            prev[1:] = v[:-1]
            prev[0] = np.inf if previous is None else previous
            accepted = prev - v > tol[keep]
            if previous is None:
                accepted[0] = True

            rejected = np.flatnonzero(~accepted)
            if rejected.size:
                j = int(rejected[0])
                k = int(keep[j])
                return count + j, float(phi[k]), float(tol[k]), int(a[k])
            count += int(v.size)
            previous = float(v[-1])
        start += chunk

    raise CapacityError(f"curve g={g} accepted every index up to {CENSUS_MAX_A}")


def _next_chunk(last_count: int) -> int:
    return max(CENSUS_CHUNK, last_count + 64)


def _finish(report: CensusReport, row: CensusRow, termination: str) -> CensusReport:
    report.terminal_g = row.g
    report.terminal_phi = row.phi
    report.terminal_omega = row.omega
    report.terminal_dphi_or_domega = row.gap_to_previous_curve
    report.terminal_d_omega = row.d_omega
    report.termination = termination
    logger.info(
        "census finished (%s) at g=%s after %d curves: %d states",
        termination, row.g, report.curves_counted, report.total_states,
    )
    return report


def census_unscaled(
    spec: DeviceSpec,
    g0: float = CENSUS_G0,
    dg: float = CENSUS_DG,
    max_curves: int = CENSUS_MAX_CURVES,
) -> CensusReport:
    if not dg > 0:
        raise DomainError(f"dg must be > 0, got {dg}")

    report = CensusReport(scaled=False)
    g = g0
    last_phi = 0.0
    chunk = CENSUS_CHUNK
    while report.curves_counted < max_curves:
        g += dg
        count, phi, tol, a = count_states_on_curve(g, spec, scaled=False, chunk=chunk)
        chunk = _next_chunk(count)
        report.total_states += count
        gap = abs(last_phi - phi)
        row = CensusRow(g=g, phi=phi, omega=phi, a_last=a, gap_to_previous_curve=gap, d_omega=tol)
        report.rows.append(row)
        report.curves_counted += 1
        logger.debug("g=%s count=%d phi=%s gap=%s d_omega=%s", g, count, phi, gap, tol)

        if gap < tol:
            return _finish(report, row, "collapse")
        if phi > spec.omega_max:
            return _finish(report, row, "limit")
        last_phi = phi

    raise CapacityError(f"unscaled census did not terminate within {max_curves} curves")


def _escalate(
    g: float, dg: float, last_omega: float, spec: DeviceSpec, chunk: int
) -> Tuple[float, float]:
    """Widen dg until the next curve clears the previous one; returns (g, dg)."""
    for _ in range(CENSUS_MAX_RETRIES):
        limit_g = g
        scaler = 2
        dg = dg * scaler
        logger.info("adjusting dg to %s", dg)
        g += dg
        _, phi, tol, _ = count_states_on_curve(g, spec, scaled=True, chunk=chunk)
        omega = phi * spec.cd
        if abs(last_omega - omega) < tol:
            scaler += 1
            dg = dg * scaler
            g = limit_g + dg
            logger.info("adjusting dg by adding %s to it", dg)
        else:
            return g, dg
    raise CapacityError(f"dg escalation did not clear the tolerance after {CENSUS_MAX_RETRIES} attempts")


def census_scaled(
    spec: DeviceSpec,
    g0: float = CENSUS_G0,
    dg: float = CENSUS_DG_SCALED,
    track_previous_curve: bool = False,
    max_curves: int = CENSUS_MAX_CURVES,
) -> CensusReport:
    if spec.cd is None:
        raise DomainError(f"device {spec.name!r} has no scaling coefficient; calibrate it first")
    if not dg > 0:
        raise DomainError(f"dg must be > 0, got {dg}")

    report = CensusReport(scaled=True)
    g = g0
    last_omega = 0.0
    chunk = CENSUS_CHUNK
    while report.curves_counted < max_curves:
        g += dg
        count, phi, tol, a = count_states_on_curve(g, spec, scaled=True, chunk=chunk)
        chunk = _next_chunk(count)
        report.total_states += count
        omega = phi * spec.cd
        gap = abs(last_omega - omega)
        row = CensusRow(g=g, phi=phi, omega=omega, a_last=a, gap_to_previous_curve=gap, d_omega=tol)
        report.rows.append(row)
        report.curves_counted += 1
        logger.debug("g=%s count=%d omega=%s gap=%s d_omega=%s", g, count, omega, gap, tol)

        if gap < tol:
            logger.info("d omega = %s < %s at g=%s", gap, tol, g)
            # Retried curves are trial runs: not counted, not written.
            g, dg = _escalate(g, dg, last_omega, spec, chunk)
            report.escalations += 1
        elif omega > spec.omega_max:
            return _finish(report, row, "limit")
        elif track_previous_curve:
            last_omega = omega

    raise CapacityError(f"scaled census did not terminate within {max_curves} curves")


def calibrate_cd(spec: DeviceSpec, dg: float = CENSUS_DG) -> DeviceSpec:
    """Return `spec` with C_d set from the terminal angle of its unscaled census."""
    report = census_unscaled(spec, dg=dg)
    cd = scaling_coefficient(report.terminal_phi, spec.omega_max)
    logger.info("calibrated %s: L_b=%s cd=%s", spec.name, report.terminal_phi, cd)
    return spec.with_cd(cd)


def emit_csv(report: CensusReport, path: Union[str, Path]) -> Path:
    path = Path(path)
    report.to_frame().to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT)
    return path


def _num(x: float) -> str:
    x = float(x)
    return str(int(x)) if x.is_integer() else str(x)


def summary_lines(report: CensusReport, spec: DeviceSpec) -> List[str]:
    """The summary block printed at the end of a sweep."""
    gap = report.terminal_dphi_or_domega
    lines = [f"g: {report.terminal_g}", f"phi: {report.terminal_phi}"]
    if report.scaled:
        lines.append(f"omega: {report.terminal_omega}")
    lines.append(f"d omega: {gap}")

    if report.termination == "collapse":
        lines.append(f"d phi = {gap} < d omega = {report.terminal_d_omega}")
    elif report.scaled:
        lines.append(f"omega = {report.terminal_omega} > max omega = {_num(spec.omega_max)}")
    else:
        lines.append(f"phi = {report.terminal_phi} > max phi = {_num(spec.omega_max)}")
    lines.append(f"num states: {report.total_states}")
    return lines
