"""
Device controller: loads oscillator profiles for the CLI and the pages.

Profiles are small key-value files under the device directory (see
`common.settings.device_dir`). They are parsed with `dotenv_values`, so the
format is the same as a `.env` file:

    name=AX7MAF1
    stability_ppm=50
    omega_max_hz=2100000000
    cd=2309321037

Key functions:
    - `list_profiles()` names available in the device directory.
    - `load_profile(name)` -> `DeviceSpec`.
    - `profiles_frame()` overview table for the home page.
"""

# Import libraries
from __future__ import annotations

import logging
from pathlib import Path
from typing import List, Optional, Union

import pandas as pd
from dotenv import dotenv_values

from common.errors import DomainError, UnknownDeviceError
from common.settings import default_device, device_dir
from models.device_spec import DeviceSpec

logger = logging.getLogger(__name__)

PROFILE_SUFFIX = ".env"


def _profile_files(directory: Optional[Path] = None) -> dict:
    directory = Path(directory or device_dir())
    if not directory.is_dir():
        return {}
    return {p.stem.lower(): p for p in sorted(directory.glob(f"*{PROFILE_SUFFIX}"))}


def list_profiles(directory: Optional[Path] = None) -> List[str]:
    return list(_profile_files(directory))


def _float(values: dict, key: str, path: Path, required: bool = True) -> Optional[float]:
    raw = values.get(key)
    if raw is None or str(raw).strip() == "":
        if required:
            raise DomainError(f"{path.name}: missing key {key!r}")
        return None
    try:
        return float(raw)
    except ValueError:
        raise DomainError(f"{path.name}: {key}={raw!r} is not a number") from None


def parse_profile(path: Union[str, Path]) -> DeviceSpec:
    path = Path(path)
    values = dotenv_values(path)
    return DeviceSpec(
        name=values.get("name") or path.stem.upper(),
        stability_ppm=_float(values, "stability_ppm", path),
        omega_max=_float(values, "omega_max_hz", path),
        cd=_float(values, "cd", path, required=False),
        description=values.get("description") or "",
    )


def load_profile(name: Optional[str] = None, directory: Optional[Path] = None) -> DeviceSpec:
    """
    Load a device profile by name (file stem, case-insensitive) or by path.

    Raises `UnknownDeviceError` when nothing matches.
    """
    name = name or default_device()
    as_path = Path(name)
    if as_path.suffix == PROFILE_SUFFIX and as_path.is_file():
        return parse_profile(as_path)

    files = _profile_files(directory)
    path = files.get(name.lower())
    if path is None:
        known = ", ".join(files) or "none"
        raise UnknownDeviceError(f"unknown device {name!r} (available: {known})")
    spec = parse_profile(path)
    logger.info("loaded device %s from %s", spec.name, path)
    return spec


def profiles_frame(directory: Optional[Path] = None) -> pd.DataFrame:
    rows = []
    for key, path in _profile_files(directory).items():
        spec = parse_profile(path)
        rows.append({
            "profile": key,
            "name": spec.name,
            "stability_ppm": spec.stability_ppm,
            "omega_max_hz": spec.omega_max,
            "cd": spec.cd,
            "description": spec.description,
        })
    return pd.DataFrame(rows, columns=["profile", "name", "stability_ppm", "omega_max_hz", "cd", "description"])
