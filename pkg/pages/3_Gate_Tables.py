"""
Gate tables page.

Shows the X / CNOT transition tables, the x1 reflection cases and the Z / Y
phase-shift rules, and lets the user push a flag word through Z or Y.
"""

# Import libraries
import streamlit as st

from common.errors import EmulatorError
from common.gate_engine import (
    GROUP_STATES, Target, apply_y, apply_z, gate_table_frame, reflection_frame, y_rule_frame, z_rule_frame,
)
from common.flag_processor import from_phase_range
from common.ui import sidebar_header

st.set_page_config(page_title="Gate tables", layout="wide")


def main():
    sidebar_header()
    st.title("Gate tables (two qubits)")
    st.caption(
        "X and CNOT move a state between vertex and surface groups; Z and Y shift the phase "
        "range of the output oscillation."
    )

    tables = gate_table_frame()
    tab_names = ["x1", "x2", "x12", "cnot"]
    for tab, name in zip(st.tabs(tab_names), tab_names):
        with tab:
            st.dataframe(tables[tables["operation"] == name], use_container_width=True)

    st.markdown("## x1 reflection cases")
    st.dataframe(reflection_frame(), use_container_width=True)

    st.markdown("## Phase-shift rules")
    col_z, col_y = st.columns(2)
    col_z.subheader("Z")
    col_z.dataframe(z_rule_frame(), use_container_width=True)
    col_y.subheader("Y")
    col_y.dataframe(y_rule_frame(), use_container_width=True)

    st.markdown("## Try a gate")
    flag_range = st.slider("Phase range (flag word)", 0, 255, 0)
    store = from_phase_range(flag_range, 2)
    st.caption(f"Flag pairs: {[(p.imaginary, p.negative) for p in store.pairs()]}")
    target = st.selectbox("Targets", [t.value for t in Target], index=2)
    state = st.selectbox("Group state", GROUP_STATES, format_func=str)
    try:
        z_out = apply_z(Target(target), flag_range)
        y_out, y_state = apply_y(flag_range, state, Target(target))
    except EmulatorError as exc:
        st.error(str(exc))
        return
    st.markdown(f"**Z:** range {flag_range} → {z_out}")
    st.markdown(f"**Y:** range {flag_range} → {y_out}, state {y_state}")


if __name__ == "__main__":
    main()
