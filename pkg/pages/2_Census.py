"""
Census page.

Runs the unscaled state census for the selected device profile and shows the
summary block, the per-curve table and a CSV download. The scaled sweep
(about 240000 curves) is left to the CLI; this page only offers it with a
coarse dg so it stays interactive.
"""

# Import libraries
import streamlit as st

from common.constants import CENSUS_DG, CENSUS_G0, CSV_FLOAT_FORMAT
from common.curve_census import summary_lines
from common.errors import EmulatorError
from common.simplex_model import build_layout, layout_frames
from common.ui import sidebar_header
from controllers.census_controller import run_census
from controllers.device_controller import load_profile

st.set_page_config(page_title="Census", layout="wide")


@st.cache_data(ttl=3600, show_spinner=False)
def _cached_census(device: str, scaled: bool, dg: float, g0: float):
    spec = load_profile(device)
    report, spec = run_census(spec, scaled=scaled, dg=dg, g0=g0)
    return report.to_frame(), summary_lines(report, spec)


def main():
    spec = sidebar_header()
    st.title("State census")
    st.caption(
        "Counts how many radial indices each g-curve can hold while adjacent values stay "
        "further apart than the oscillator tolerance."
    )
    if spec is None:
        st.stop()

    col_mode, col_dg, col_g0 = st.columns(3)
    scaled = col_mode.toggle("Frequency space (scaled)", value=False)
    dg = col_dg.number_input("dg", min_value=0.001, value=CENSUS_DG, format="%.4f")
    g0 = col_g0.number_input("Start g0", min_value=0.0, value=CENSUS_G0, format="%.2f")

    if st.button("Run census", type="primary"):
        try:
            with st.spinner("Sweeping g-curves..."):
                frame, lines = _cached_census(st.session_state["device"], scaled, float(dg), float(g0))
        except EmulatorError as exc:
            st.error(str(exc))
            st.stop()

        st.markdown("## Summary")
        st.code("\n".join(lines), language=None)
        st.markdown("## Curves")
        st.dataframe(frame, use_container_width=True)
        st.download_button(
            "Download CSV",
            frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT),
            file_name="census.csv",
            mime="text/csv",
        )

    st.divider()
    st.markdown("## Simplex layout")
    col_q, col_c = st.columns(2)
    qubits = col_q.number_input("Qubits", min_value=1, max_value=4, value=2)
    curves = col_c.number_input("Curves", min_value=16, value=240000, step=1000)
    try:
        chiefs, surfaces = layout_frames(build_layout(int(qubits), int(curves)))
    except EmulatorError as exc:
        st.warning(str(exc))
        return
    st.subheader("Chief curves")
    st.dataframe(chiefs, use_container_width=True)
    st.subheader("Surface groups")
    st.dataframe(surfaces, use_container_width=True)


if __name__ == "__main__":
    main()
