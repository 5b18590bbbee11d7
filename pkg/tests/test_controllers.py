import numpy as np
import pytest

from common.circuit_sim import Ensemble, PureState
from common.constants import CIRCUIT_DIR
from common.errors import CircuitSyntaxError, DomainError, UnknownDeviceError
from controllers.census_controller import layout_outputs, run_census, write_report
from controllers.device_controller import list_profiles, load_profile, profiles_frame
from controllers.sim_controller import (
    equal_bits_frequency, load_circuit, parse_circuit, run_circuit, run_trials,
)
from controllers.synth_controller import run_synthesis, write_expressions


def test_profiles_load_from_device_dir(device_dir):
    assert list_profiles() == ["ax7maf1", "nocd"]
    spec = load_profile("AX7MAF1")
    assert spec.stability_ppm == 50
    assert spec.omega_max == 2.1e9
    assert spec.cd == 2309321037
    assert load_profile("nocd").cd is None
    assert len(profiles_frame()) == 2


def test_unknown_profile(device_dir):
    with pytest.raises(UnknownDeviceError):
        load_profile("ax9")


def test_profile_with_bad_number(device_dir):
    (device_dir / "broken.env").write_text("stability_ppm=lots\nomega_max_hz=1e9\n", encoding="utf-8")
    with pytest.raises(DomainError):
        load_profile("broken")


def test_builtin_profiles_ship_with_the_repo():
    assert {"ax7maf1", "axplt2500"} <= set(list_profiles())


def test_census_report_written_atomically(ax7maf1, tmp_path):
    report, spec = run_census(ax7maf1, scaled=False, dg=0.01)
    assert spec is ax7maf1
    assert report.total_states == 452335
    path = write_report(report, tmp_path / "census.csv")
    assert path.exists()
    assert not (tmp_path / "census.csv.part").exists()


def test_layout_outputs(tmp_path):
    chiefs, surfaces = layout_outputs(2, 240000, tmp_path)
    assert chiefs.read_text().splitlines()[0] == "state,chief_g"
    assert len(surfaces.read_text().splitlines()) == 13


def test_synthesis_result(tmp_path):
    result = run_synthesis("perm")
    assert result.removed == 1044
    assert result.text().splitlines()[0] == "P_0 = W_3·W_6 + W_3·W_5"
    path = write_expressions(result, tmp_path / "perm.txt")
    assert path.read_text(encoding="utf-8").startswith("P_0 = ")
    with pytest.raises(DomainError):
        run_synthesis("nand")


@pytest.mark.parametrize("text, reason", [
    ("h 0\n", "must start"),
    ("qubits 2\nh 2\n", "out of range"),
    ("qubits 2\nif c0 x 1\n", "not measured"),
    ("qubits 2\ncx 0 0\n", "must differ"),
    ("qubits 2\nswap 0 1\n", "unknown instruction"),
])
def test_parse_circuit_errors(text, reason):
    with pytest.raises(CircuitSyntaxError, match=reason):
        parse_circuit(text)


def test_parse_circuit_with_comments():
    circuit = parse_circuit("# bell\nqubits 2\nh 0  # superpose\ncx 0 1\nm 0 -> a\nm 1 -> b\n")
    assert circuit.qubits == 2
    assert circuit.instructions == [("h", 0), ("cx", 0, 1), ("m", 0, "a"), ("m", 1, "b")]
    assert circuit.classical_bits == ["a", "b"]


def test_bell_trials_are_perfectly_correlated():
    circuit = load_circuit(CIRCUIT_DIR / "bell.circ")
    frame = run_trials(circuit, seed=0, trials=1000)
    assert set(frame["outcome"]) <= {"00", "11"}
    assert frame["count"].sum() == 1000
    assert equal_bits_frequency(frame) == 1.0


def test_trials_are_deterministic():
    circuit = load_circuit(CIRCUIT_DIR / "bell.circ")
    assert run_trials(circuit, seed=7, trials=50).equals(run_trials(circuit, seed=7, trials=50))


def test_teleport_circuit_moves_input_to_qubit_one():
    circuit = load_circuit(CIRCUIT_DIR / "teleport.circ")
    for seed in range(8):
        result = run_circuit(circuit, seed=seed)
        assert np.abs(result.densities[1] - np.array([[0, 0], [0, 1]])).max() < 1e-10


def test_teleport_circuit_with_arbitrary_input():
    circuit = load_circuit(CIRCUIT_DIR / "teleport.circ")
    amplitudes = np.array([0.6, 0.8j])
    rho_in = np.outer(amplitudes, amplitudes.conj())
    for seed in range(4):
        initial = Ensemble([PureState(0.6, "000"), PureState(0.8j, "001")], num_qubits=3, seed=seed)
        result = run_circuit(circuit, initial=initial)
        assert np.abs(result.densities[1] - rho_in).max() < 1e-10
