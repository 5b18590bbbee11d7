import numpy as np
import pandas as pd
import pytest

from common.constants import CSV_COLUMNS
from common.curve_census import (
    calibrate_cd, census_scaled, census_unscaled, count_states_on_curve, emit_csv, summary_lines,
)
from common.errors import CapacityError, DomainError
from common.pspectrum_codec import encode_phi_array
from models.device_spec import DeviceSpec

AX7MAF1 = DeviceSpec(name="AX7MAF1", stability_ppm=50, omega_max=2.1e9, cd=2309321037)


@pytest.fixture(scope="module")
def unscaled_report():
    return census_unscaled(AX7MAF1, dg=0.01)


@pytest.fixture(scope="module")
def tracked_report():
    return census_scaled(AX7MAF1, dg=0.01, track_previous_curve=True)


def test_unscaled_census_from_g_one(unscaled_report):
    r = unscaled_report
    assert r.total_states == 452335
    assert r.curves_counted == 2396
    assert r.terminal_g == pytest.approx(24.960000000001102, abs=1e-9)
    assert r.terminal_phi == pytest.approx(0.9093581907426893, rel=1e-12)
    assert r.terminal_dphi_or_domega == pytest.approx(2.926448341844523e-05, rel=1e-6)
    assert r.terminal_d_omega == pytest.approx(4.546790953713446e-05, rel=1e-9)
    assert r.termination == "collapse"
    assert r.curves_counted == len(r.rows)


def test_unscaled_census_from_g_zero_reproduces_published_total(unscaled_report):
    r = census_unscaled(AX7MAF1, g0=0.0, dg=0.01)
    assert r.total_states == 473498
    assert r.curves_counted == 2496
    assert r.terminal_phi == unscaled_report.terminal_phi
    assert r.terminal_dphi_or_domega == unscaled_report.terminal_dphi_or_domega
    assert summary_lines(r, AX7MAF1)[-1] == "num states: 473498"


def test_unscaled_summary_block(unscaled_report):
    lines = summary_lines(unscaled_report, AX7MAF1)
    assert [line.split(":")[0] for line in lines[:3]] == ["g", "phi", "d omega"]
    assert lines[3].startswith("d phi = ")
    assert " < d omega = " in lines[3]
    assert lines[-1] == "num states: 452335"


def test_coarser_step_collapses_later_with_fewer_states(unscaled_report):
    r = census_unscaled(AX7MAF1, dg=0.02)
    assert r.total_states == 341967
    assert r.curves_counted == 1855
    assert r.terminal_g == pytest.approx(38.1, abs=1e-6)
    assert r.termination == "collapse"
    assert r.total_states < unscaled_report.total_states


def test_emit_csv_writes_one_row_per_curve(unscaled_report, tmp_path):
    path = emit_csv(unscaled_report, tmp_path / "census.csv")
    frame = pd.read_csv(path)
    assert list(frame.columns) == CSV_COLUMNS
    assert len(frame) == unscaled_report.curves_counted
    assert frame["g"].iloc[-1] == pytest.approx(unscaled_report.terminal_g)


def test_count_states_on_curve_reports_first_rejection():
    count, phi, tol, a = count_states_on_curve(2.0, AX7MAF1)
    assert count > 0
    assert a > count
    assert tol == pytest.approx(50 * (phi / 1e6))


@pytest.mark.parametrize("g", [1.01, 3.0, 12.5, 24.0])
def test_accepted_values_stay_more_than_one_tolerance_apart(g):
    count, _, _, first_rejected = count_states_on_curve(g, AX7MAF1)
    phis = encode_phi_array(np.arange(1, first_rejected), g)
    accepted = phis[np.isfinite(phis)]
    assert accepted.size == count
    assert (accepted[:-1] - accepted[1:] > 50 * (accepted[1:] / 1e6)).all()


def test_count_states_on_curve_rejects_bad_g():
    with pytest.raises(DomainError):
        count_states_on_curve(0.0, AX7MAF1)


def test_scaled_census_requires_cd():
    with pytest.raises(DomainError):
        census_scaled(DeviceSpec(name="raw", stability_ppm=50, omega_max=2.1e9))


def test_scaled_census_stops_at_frequency_limit(unscaled_report):
    r = census_scaled(AX7MAF1, dg=0.01)
    assert r.total_states == 452335
    assert r.escalations == 0
    assert r.termination == "limit"
    assert r.terminal_omega > AX7MAF1.omega_max
    assert r.terminal_dphi_or_domega == r.terminal_omega
    assert r.total_states >= unscaled_report.total_states


def test_tracked_scaled_census_escalates_once(tracked_report, unscaled_report):
    r = tracked_report
    assert r.total_states == 452511
    assert r.escalations == 1
    assert r.termination == "limit"
    assert r.curves_counted == 2397
    assert r.terminal_g == pytest.approx(25.0, abs=1e-6)
    assert r.total_states >= unscaled_report.total_states


def test_census_stops_after_max_curves():
    with pytest.raises(CapacityError):
        census_unscaled(AX7MAF1, dg=0.01, max_curves=3)
    with pytest.raises(DomainError):
        census_unscaled(AX7MAF1, dg=0.0)


def test_calibrate_cd_matches_published_coefficient():
    spec = calibrate_cd(DeviceSpec(name="AX7MAF1", stability_ppm=50, omega_max=2.1e9))
    assert spec.cd == pytest.approx(2309321037, rel=1e-9)


@pytest.mark.slow
def test_scaled_census_reproduces_published_totals():
    r = census_scaled(AX7MAF1, dg=1e-4)
    assert r.total_states == 45452916
    assert r.terminal_omega == pytest.approx(2100000000.0495648, abs=1e-3)
    assert r.curves_counted == 239600
    assert r.termination == "limit"
    lines = summary_lines(r, AX7MAF1)
    assert lines[-2].endswith("> max omega = 2100000000")
    assert lines[-1] == "num states: 45452916"
