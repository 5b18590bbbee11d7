"""
Circuit simulator page.

Type or pick a circuit description, choose a seed, and run it once (classical
bits, density matrices, resource report) or many times (outcome table).
"""

# Import libraries
import numpy as np
import pandas as pd
import streamlit as st

from common.constants import CIRCUIT_DIR
from common.errors import EmulatorError
from common.settings import default_seed
from common.ui import sidebar_header
from controllers.sim_controller import equal_bits_frequency, parse_circuit, result_frame, run_circuit, run_trials

st.set_page_config(page_title="Circuit simulator", layout="wide")


def _samples() -> dict:
    return {p.stem: p.read_text(encoding="utf-8") for p in sorted(CIRCUIT_DIR.glob("*.circ"))}


def _matrix_frame(rho: np.ndarray) -> pd.DataFrame:
    return pd.DataFrame(np.round(rho, 10).astype(str), index=["0", "1"], columns=["0", "1"])


def main():
    sidebar_header()
    st.title("Circuit simulator")
    st.caption("Pure-state ensemble simulation with seeded measurement.")

    samples = _samples()
    choice = st.selectbox("Sample circuit", ["(custom)"] + list(samples))
    text = st.text_area("Circuit", value=samples.get(choice, "qubits 2\nh 0\ncx 0 1\nm 0 -> c0\nm 1 -> c1\n"), height=220)
    col_seed, col_trials = st.columns(2)
    seed = col_seed.number_input("Seed", min_value=0, value=default_seed(), step=1)
    trials = col_trials.number_input("Trials", min_value=1, max_value=100000, value=1, step=1)

    try:
        circuit = parse_circuit(text)
        if trials > 1:
            frame = run_trials(circuit, seed=int(seed), trials=int(trials))
        else:
            result = run_circuit(circuit, seed=int(seed))
    except EmulatorError as exc:
        st.error(str(exc))
        return

    if trials > 1:
        st.markdown("## Outcomes")
        st.caption(f"Classical bits, in order: {', '.join(circuit.classical_bits) or 'none'}")
        st.dataframe(frame, use_container_width=True)
        if len(circuit.classical_bits) > 1:
            st.metric("Equal bits frequency", f"{equal_bits_frequency(frame):.3f}")
        return

    st.markdown("## Classical bits")
    st.dataframe(result_frame(result), use_container_width=True)
    for q, rho in result.densities.items():
        st.subheader(f"Density matrix of qubit {q}")
        st.dataframe(_matrix_frame(rho))
    st.markdown("## Resource requirements")
    st.code("\n".join(result.ensemble.report_max_requirements().lines()), language=None)


if __name__ == "__main__":
    main()
