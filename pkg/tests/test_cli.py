from common.constants import CIRCUIT_DIR
import cli


def test_synth_perm_prints_removed_count(capsys):
    assert cli.main(["synth", "perm"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "removed 1044 terms"
    assert out[1] == "P_0 = W_3·W_6 + W_3·W_5"


def test_synth_cancel_prints_first_line(capsys):
    assert cli.main(["synth", "cancel"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1].startswith("C_1 = W_1·W_7")


def test_synth_unwritable_output(tmp_path, capsys):
    assert cli.main(["synth", "perm", "--out", str(tmp_path / "missing" / "perm.txt")]) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_census_prints_published_total(device_dir, tmp_path, capsys):
    out_file = tmp_path / "census.csv"
    assert cli.main(["--device", "ax7maf1", "census", "--g0", "0", "--dg", "0.01", "--out", str(out_file)]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "num states: 473498"
    assert out_file.exists()


def test_census_unknown_device_writes_nothing(device_dir, tmp_path):
    out_file = tmp_path / "census.csv"
    assert cli.main(["--device", "nope", "census", "--out", str(out_file)]) == 1
    assert not out_file.exists()


def test_sim_trials(capsys):
    assert cli.main(["sim", str(CIRCUIT_DIR / "bell.circ"), "--trials", "1000", "--seed", "0"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "equal bits frequency: 1.0"


def test_sim_is_deterministic(capsys):
    args = ["sim", str(CIRCUIT_DIR / "teleport.circ"), "--seed", "3"]
    cli.main(args)
    first = capsys.readouterr().out
    cli.main(args)
    assert capsys.readouterr().out == first
    assert "density q1:" in first


def test_sim_missing_file(tmp_path):
    assert cli.main(["sim", str(tmp_path / "nothing.circ")]) == 1


def test_gates_table_csv(capsys):
    assert cli.main(["gates", "x1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "operation,operand_vertex,operand_surface,final_vertex,final_surface"
    assert len(out) == 13


def test_encode_and_decode(capsys):
    assert cli.main(["encode", "--a", "5", "--g", "2"]) == 0
    phi = float(capsys.readouterr().out.splitlines()[0].split(": ")[1])
    assert cli.main(["decode", "--phi", repr(phi), "--g", "2", "--a-max", "10"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "a: 5"


def test_layout_writes_tables(tmp_path, capsys):
    assert cli.main(["layout", "--qubits", "2", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "chief_curves.csv").exists()
    assert (tmp_path / "surface_groups.csv").exists()
