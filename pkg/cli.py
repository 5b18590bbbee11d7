"""
Command-line entry point for the dual-oscillator emulator.

Subcommands:
    census   run the unscaled or scaled state census and print its summary
    encode   encode (a, b) on curve g
    decode   recover a (and b) from phi (and theta)
    gates    print or export a gate table
    synth    generate and minimize the decode-stage expressions
    sim      run a circuit description file
    layout   write the simplex curve layout tables

Summary lines go to stdout exactly as they are diffed by the reproduction
notes; diagnostics go to the log (`-v` for INFO, `-vv` for DEBUG). Any
emulator or I/O error ends the run with a one-line message and exit code 1.

Example:
    python cli.py --device ax7maf1 census --g0 0 --dg 0.01 --out census.csv
    python cli.py synth perm
    python cli.py sim circuits/bell.circ --trials 1000
"""

# Import libraries
from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

import numpy as np

from common.constants import CENSUS_DG_SCALED, CENSUS_G0, LAYOUT_CURVES
from common.curve_census import summary_lines
from common.decode_pipeline import InstructionWord, decode_word
from common.errors import EmulatorError
from common.gate_engine import gate_table_frame, reflection_frame, y_rule_frame, z_rule_frame
from common.pspectrum_codec import decode_a, decode_b, make_encoding
from common.settings import configure_logging, default_device, default_seed
from controllers.census_controller import layout_outputs, run_census, write_report
from controllers.device_controller import load_profile
from controllers.sim_controller import equal_bits_frequency, load_circuit, run_circuit, run_trials
from controllers.synth_controller import SYNTH_KINDS, run_synthesis, write_expressions

logger = logging.getLogger("cli")

GATE_TABLES = ("x1", "x2", "x12", "cnot", "reflection", "z", "y")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="doe", description="Dual-oscillator quantum state emulator")
    parser.add_argument("--device", default=None, help="device profile name or .env path (default: DOE_DEFAULT_DEVICE)")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="count distinguishable states per g-curve")
    p.add_argument("--scaled", action="store_true", help="sweep in frequency space (omega = phi * C_d)")
    p.add_argument("--dg", type=float, default=None, help="curve step (default 0.01, or 1e-4 when scaled)")
    p.add_argument("--g0", type=float, default=CENSUS_G0, help="curve value the sweep starts from (first curve is g0 + dg)")
    p.add_argument("--track-previous", action="store_true", help="compare each curve against the previous one")
    p.add_argument("--out", default=None, help="CSV output path")

    p = sub.add_parser("encode", help="encode (a, b) on curve g")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=float, default=0.0)
    p.add_argument("--g", type=float, required=True)
    p.add_argument("--scaled", action="store_true", help="also print omega = phi * C_d")

    p = sub.add_parser("decode", help="recover a from phi on curve g")
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--g", type=float, required=True)
    p.add_argument("--a-max", type=int, required=True, dest="a_max")
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--word", default=None, help="also decode a 225-digit hex instruction word")

    p = sub.add_parser("gates", help="print a gate table as CSV")
    p.add_argument("table", choices=GATE_TABLES)
    p.add_argument("--out", default=None)

    p = sub.add_parser("synth", help="decode-stage sum-of-products synthesis")
    p.add_argument("kind", choices=SYNTH_KINDS)
    p.add_argument("--out", default=None)

    p = sub.add_parser("sim", help="run a circuit description file")
    p.add_argument("circuit")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=1)

    p = sub.add_parser("layout", help="chief curves and surface groups of the simplex layout")
    p.add_argument("--qubits", type=int, default=2)
    p.add_argument("--curves", type=int, default=LAYOUT_CURVES)
    p.add_argument("--dg", type=float, default=CENSUS_DG_SCALED)
    p.add_argument("--out", default=".", help="output directory")
    return parser


# ---------- Subcommand handlers ----------

def _census(args) -> None:
    spec = load_profile(args.device or default_device())
    report, spec = run_census(
        spec, scaled=args.scaled, dg=args.dg, track_previous_curve=args.track_previous, g0=args.g0,
    )
    if args.out:
        write_report(report, args.out)
    for line in summary_lines(report, spec):
        print(line)


def _encode(args) -> None:
    cd = None
    if args.scaled:
        cd = load_profile(args.device or default_device()).cd
    enc = make_encoding(args.a, args.b, args.g, cd)
    print(f"phi: {enc.phi}")
    print(f"theta: {enc.theta}")
    if cd is not None:
        print(f"omega: {enc.omega}")
    if not enc.encodable:
        print("unencodable")


def _decode(args) -> None:
    print(f"a: {decode_a(args.phi, args.g, args.a_max)}")
    if args.theta is not None:
        print(f"b: {decode_b(args.theta)}")
    if args.word:
        for group in decode_word(InstructionWord.from_hex(args.word)):
            ops = " ".join(o.op.name for o in group.cancelled) or "-"
            print(f"q{group.target}: {ops} ({len(group.convolutions)} convolutions)")


def _gates(args) -> None:
    if args.table == "reflection":
        frame = reflection_frame()
    elif args.table == "z":
        frame = z_rule_frame()
    elif args.table == "y":
        frame = y_rule_frame()
    else:
        frame = gate_table_frame()
        frame = frame[frame["operation"] == args.table]
    if args.out:
        frame.to_csv(args.out, index=False)
    else:
        print(frame.to_csv(index=False), end="")


def _synth(args) -> None:
    result = run_synthesis(args.kind)
    if args.out:
        write_expressions(result, args.out)
    print(f"removed {result.removed} terms")
    print(result.text())


def _sim(args) -> None:
    circuit = load_circuit(args.circuit)
    seed = default_seed() if args.seed is None else args.seed
    if args.trials > 1:
        frame = run_trials(circuit, seed=seed, trials=args.trials)
        print(frame.to_string(index=False))
        if len(circuit.classical_bits) > 1:
            print(f"equal bits frequency: {equal_bits_frequency(frame)}")
        return
    result = run_circuit(circuit, seed=seed)
    for name, bit in result.bits.items():
        print(f"{name}: {bit}")
    for q, rho in result.densities.items():
        print(f"density q{q}:")
        print(np.array2string(rho, precision=6, suppress_small=True))


def _layout(args) -> None:
    for path in layout_outputs(args.qubits, args.curves, args.out, dg=args.dg):
        print(path)


HANDLERS = {
    "census": _census,
    "encode": _encode,
    "decode": _decode,
    "gates": _gates,
    "synth": _synth,
    "sim": _sim,
    "layout": _layout,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging({0: None, 1: logging.INFO}.get(args.verbose, logging.DEBUG))
    try:
        if args.device is not None:
            load_profile(args.device)
        HANDLERS[args.command](args)
    except (EmulatorError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
