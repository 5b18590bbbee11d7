import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from models.device_spec import DeviceSpec  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow reproductions")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def ax7maf1():
    return DeviceSpec(name="AX7MAF1", stability_ppm=50, omega_max=2.1e9, cd=2309321037)


@pytest.fixture
def device_dir(tmp_path, monkeypatch):
    d = tmp_path / "devices"
    d.mkdir()
    (d / "ax7maf1.env").write_text(
        "name=AX7MAF1\nstability_ppm=50\nomega_max_hz=2100000000\ncd=2309321037\n", encoding="utf-8"
    )
    (d / "nocd.env").write_text("name=NOCD\nstability_ppm=3.2\nomega_max_hz=12000000000\n", encoding="utf-8")
    monkeypatch.setenv("DOE_DEVICE_DIR", str(d))
    return d
