"""
Decode synthesis page.

Generates the permutation (P) and cancellation (C) sum-of-products logic of
the decode stage, shows how many terms the minimizer removed, and decodes an
instruction word typed as hex.
"""

# Import libraries
import streamlit as st

from common.decode_pipeline import InstructionWord, decode_word
from common.errors import EmulatorError
from common.ui import sidebar_header
from controllers.synth_controller import SYNTH_KINDS, run_synthesis

st.set_page_config(page_title="Decode synthesis", layout="wide")


@st.cache_data(ttl=3600, show_spinner=False)
def _cached_synthesis(kind: str):
    result = run_synthesis(kind)
    return result.removed, result.text(), result.frame()


def main():
    sidebar_header()
    st.title("Decode synthesis")
    st.caption(
        "Each output bit is a sum of products over the W bits of a group's op nibbles. "
        "Terms that contain a smaller term of the same output are removed."
    )

    kind = st.radio("Expression set", SYNTH_KINDS, horizontal=True)
    with st.spinner("Generating expressions..."):
        removed, text, frame = _cached_synthesis(kind)

    st.metric("Removed terms", removed)
    st.dataframe(frame, use_container_width=True)
    st.code(text, language=None)

    st.divider()
    st.markdown("## Decode an instruction word")
    word_hex = st.text_input("Hex word (225 digits)", value="")
    if not word_hex:
        return
    try:
        groups = decode_word(InstructionWord.from_hex(word_hex))
    except EmulatorError as exc:
        st.error(str(exc))
        return
    rows = [
        {
            "target": g.target,
            "operations": " ".join(o.op.name for o in g.operations),
            "after cancellation": " ".join(op.name for op in g.cancelled) or "-",
            "convolutions": len(g.convolutions),
        }
        for g in groups
    ]
    st.dataframe(rows, use_container_width=True)


if __name__ == "__main__":
    main()
