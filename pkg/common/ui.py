"""
UI helpers for a consistent sidebar across the Streamlit pages.

Every page calls `sidebar_header()` so the device picker and the page links
look the same everywhere. The chosen device profile is kept in
`st.session_state["device"]`.
"""

# Import libraries
from __future__ import annotations

from pathlib import Path
from typing import Optional

import streamlit as st

from common.errors import EmulatorError
from common.settings import default_device
from controllers.device_controller import list_profiles, load_profile
from models.device_spec import DeviceSpec

APP_ROOT = Path(__file__).resolve().parents[1]

PAGES = (
    ("main.py", "Home", "🏠"),
    ("pages/2_Census.py", "Census", "📈"),
    ("pages/3_Gate_Tables.py", "Gate tables", "🔀"),
    ("pages/4_Decode_Synthesis.py", "Decode synthesis", "🧮"),
    ("pages/5_Circuit_Simulator.py", "Circuit simulator", "⚛️"),
)


def _link_if_exists(rel_path: str, label: str, icon: str):
    if (APP_ROOT / rel_path).exists():
        st.sidebar.page_link(rel_path, label=label, icon=icon)


def sidebar_header() -> Optional[DeviceSpec]:
    """Render the device picker and page links; returns the selected profile."""
    st.markdown("<style>[data-testid='stSidebarNav']{display:none !important;}</style>", unsafe_allow_html=True)

    profiles = list_profiles()
    spec = None
    with st.sidebar:
        if profiles:
            current = st.session_state.get("device", default_device().lower())
            index = profiles.index(current) if current in profiles else 0
            choice = st.selectbox("Device profile", profiles, index=index, key="device_select")
            st.session_state["device"] = choice
            try:
                spec = load_profile(choice)
                st.caption(f"{spec.stability_ppm} ppm, {spec.omega_max:.4g} Hz")
            except EmulatorError as exc:
                st.error(str(exc))
        else:
            st.warning("No device profiles found; check DOE_DEVICE_DIR.")

        st.divider()
        st.markdown("#### Pages")
    for rel_path, label, icon in PAGES:
        _link_if_exists(rel_path, label, icon)
    return spec
