"""
Home page of the dual-oscillator emulator explorer.

This module defines the Streamlit page users see first. It handles:
    - page configuration (`st.set_page_config`) and `.env` loading,
    - the device profile overview and the formula spot checks
      (`common.device_model`),
    - a small encode/decode playground (`common.pspectrum_codec`).

Other pages cover the census, the gate tables, the decode synthesis and the
circuit simulator.

Notes for a new Python learner:
    - Streamlit reruns the whole script on every widget change; anything
      expensive lives behind `st.cache_data` on the page that needs it.
"""

# Import libraries
import streamlit as st
import pandas as pd
from dotenv import load_dotenv

from common.device_model import (
    flag_memory, naive_component_count, per_curve_precision, precision_percent, qubit_capacity,
)
from common.constants import LAYOUT_CURVES
from common.errors import EmulatorError
from common.pspectrum_codec import decode_a, decode_b, make_encoding
from common.ui import sidebar_header
from controllers.device_controller import profiles_frame

st.set_page_config(page_title="Emulator: Home", layout="wide")
load_dotenv(override=False)


def _spot_checks() -> pd.DataFrame:
    rows = [
        ("qubits supported by 240000 curves", qubit_capacity(LAYOUT_CURVES)),
        ("precision at Q = 20 (%)", precision_percent(20)),
        ("per-curve precision, 189.38715 states/curve (%)", round(per_curve_precision(189.38715), 6)),
        ("components for Q = 1, one per coefficient", naive_component_count(1)),
        ("flag memory for Q = 20 (bytes)", flag_memory(20).flag_bytes),
    ]
    return pd.DataFrame(rows, columns=["quantity", "value"])


def main():
    spec = sidebar_header()

    st.title("Dual-oscillator quantum state emulator")
    st.caption(
        "A mixed state is held as a point on a g-curve and read out as an oscillator frequency. "
        "Pick a device profile in the sidebar; the other pages run the census, show the gate "
        "tables, synthesize the decode logic and simulate circuits."
    )

    st.markdown("## Device profiles")
    st.dataframe(profiles_frame(), use_container_width=True)

    st.markdown("## Formula spot checks")
    st.dataframe(_spot_checks(), use_container_width=True)

    st.markdown("## Encode / decode")
    col_a, col_b, col_g = st.columns(3)
    a = col_a.number_input("a (radial index)", min_value=1, value=10, step=1)
    b = col_b.number_input("b", min_value=-1.0, max_value=1.0, value=0.0)
    g = col_g.number_input("g", min_value=0.0001, value=2.0, format="%.4f")

    try:
        enc = make_encoding(int(a), float(b), float(g), spec.cd if spec else None)
    except EmulatorError as exc:
        st.error(str(exc))
        return

    if not enc.encodable:
        st.warning("This index is unencodable on the chosen curve.")
        return

    st.markdown(f"**phi:** {enc.phi}  |  **theta:** {enc.theta}  |  **omega:** {enc.omega}")
    try:
        st.markdown(
            f"**decoded a:** {decode_a(enc.phi, float(g), int(a) + 100)}  |  **decoded b:** {decode_b(enc.theta)}"
        )
    except EmulatorError as exc:
        st.warning(str(exc))


if __name__ == "__main__":
    main()
