"""
Shared constants for the dual-oscillator emulator.

Device defaults, census parameters and the gate-level unit sizes live here so
the CLI, the Streamlit pages and the tests read the same numbers.
"""

# Import libraries
import math
from pathlib import Path

# ---------- Paths ----------
APP_ROOT           = Path(__file__).resolve().parents[1]
DEVICE_DIR_DEFAULT = APP_ROOT / "config" / "devices"
CIRCUIT_DIR        = APP_ROOT / "circuits"

# ---------- Device defaults ----------
DEFAULT_DEVICE     = "ax7maf1"
PPM_SCALE          = 1_000_000        # stability is given in parts per million
QUBIT_COUNT_BITS   = 5                # qubit-count field appended to the flag memory
FLAG_WORD_WIDTH    = 16               # 128K x 16 SRAM part

# ---------- Census ----------
CENSUS_G0          = 1.0
CENSUS_DG          = 0.01
CENSUS_DG_SCALED   = 1e-4
CENSUS_CHUNK       = 256              # a-values encoded per vectorized batch
CENSUS_MAX_A       = 10_000_000       # guard for curves that never reject
CENSUS_MAX_CURVES  = 5_000_000
CENSUS_MAX_RETRIES = 64               # escalation attempts before giving up
CSV_FLOAT_FORMAT   = "%.17g"
CSV_COLUMNS        = ["g", "phi", "omega", "a", "dphi_or_domega", "d_omega"]

# ---------- Simplex layout ----------
LAYOUT_CURVES      = 240_000
POINTS_PER_LINE    = 50

# ---------- Gate engine (Q = 2) ----------
PHASE_UNITS        = 256
PHASE_UNIT_RAD     = 2 * math.pi / PHASE_UNITS
Z_CONTROL_FREQ_HZ  = 149_660.0
SIGMOID_STEEPNESS  = 0.1

# ---------- Decode pipeline ----------
OP_BITS            = 4
TARGET_BITS        = 5
SLOTS_PER_GROUP    = 5
GROUPS_PER_WORD    = 20
SOURCE_MARKER      = 0b1111           # op nibble of a slot carrying a control source
WORD_BITS          = GROUPS_PER_WORD * SLOTS_PER_GROUP * (OP_BITS + TARGET_BITS)

# ---------- Circuit simulator ----------
AMPLITUDE_EPS      = 1e-12
PURITY_TOL         = 1e-10
DEFAULT_SEED       = 0
