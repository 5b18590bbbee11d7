import math

import pytest

from common.device_model import (
    d_omega, flag_addresses, flag_memory, naive_component_count, per_curve_precision,
    precision_percent, qubit_capacity, qubits_for_precision, scaling_coefficient,
)
from common.errors import DomainError
from models.device_spec import DeviceSpec


def test_d_omega_is_ppm_of_frequency(ax7maf1):
    assert d_omega(ax7maf1, 2.1e9) == pytest.approx(105000.0)
    assert d_omega(ax7maf1, 0.0) == 0.0


def test_d_omega_rejects_negative_frequency(ax7maf1):
    with pytest.raises(DomainError):
        d_omega(ax7maf1, -1.0)


def test_scaling_coefficient_matches_published_value():
    assert scaling_coefficient(0.9093581907426893, 2.1e9) == pytest.approx(2309321037, abs=1)


def test_scaling_coefficient_needs_positive_limit():
    with pytest.raises(DomainError):
        scaling_coefficient(0.0, 2.1e9)


@pytest.mark.parametrize("qubits, expected", [(1, 5), (2, 11), (3, 23)])
def test_naive_component_count(qubits, expected):
    assert naive_component_count(qubits) == expected


def test_precision_spot_checks():
    assert precision_percent(20) == pytest.approx(1.0)
    assert precision_percent(18) == pytest.approx(0.25)
    assert per_curve_precision(189.38715) == pytest.approx(0.264, abs=0.001)


@pytest.mark.parametrize("pr, qubits", [(0.01, 20), (0.0025, 18)])
def test_qubits_for_precision_inverts_precision_percent(pr, qubits):
    assert qubits_for_precision(pr) == pytest.approx(qubits)
    assert precision_percent(qubits) == pytest.approx(100 * pr)


def test_qubit_capacity_of_layout_curves():
    assert qubit_capacity(240000) == 18


def test_flag_memory_for_twenty_qubits():
    layout = flag_memory(20)
    assert layout.flag_bits == 2097152
    assert layout.flag_bytes == 262144
    assert layout.total_bits == 2097152 + 5
    assert layout.words_required == math.ceil((2097152 + 5) / 16)


def test_flag_addresses_with_sixteen_bit_words():
    layout = flag_memory(4)
    assert flag_addresses(0, layout) == (0, 0, 0)
    assert flag_addresses(5, layout) == (10, 0, 10)
    assert flag_addresses(9, layout) == (18, 1, 2)
    with pytest.raises(DomainError):
        flag_addresses(16, layout)


def test_device_spec_validation():
    with pytest.raises(DomainError):
        DeviceSpec(name="bad", stability_ppm=-1, omega_max=1e9)
    with pytest.raises(DomainError):
        DeviceSpec(name="bad", stability_ppm=1, omega_max=0)
    spec = DeviceSpec(name="ok", stability_ppm=3.2, omega_max=12e9)
    assert spec.cd is None
    assert spec.with_cd(5.0).cd == 5.0
