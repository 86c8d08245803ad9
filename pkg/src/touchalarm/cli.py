"""Command-line front end.

Commands: ``design`` (sizing report), ``simulate`` (scenario to CSV/WAV),
``snap`` (preferred-value lookup), ``verify`` (audit the reference worked
figures; exits 1 when errata are found), ``tolerance`` (Monte Carlo spread
of the trigger timeout).

Exit codes: 0 success, 1 errata found, 2 usage error, 3 input-file error,
4 computation error.  Reports and summaries go to stdout, diagnostics to
stderr; output files are written to a temp name and renamed on success.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import design, export, simulator
from .units import Quantity, QuantityError, format_number, format_quantity, parse_number, snap_preferred

EXIT_OK = 0
EXIT_ERRATA = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_COMPUTE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse from calling sys.exit directly
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="touchalarm",
        description="Design calculator and behavioral simulator for the touch-activated alarm.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_design = sub.add_parser("design", help="compute the full sizing/timing report")
    p_design.add_argument("circuit", nargs="?", default=None,
                          help="circuit file (omitted: stock values)")
    p_design.add_argument("--format", choices=("text", "kv"), default="text")
    p_design.add_argument("--out", default=None, help="write the report to a file")

    p_sim = sub.add_parser("simulate", help="run a touch/mains scenario")
    p_sim.add_argument("--circuit", default=None)
    p_sim.add_argument("--scenario", required=True)
    p_sim.add_argument("--sample-rate", dest="sample_rate", type=int, default=16000)
    p_sim.add_argument("--csv", default=None, help="write the sampled waveforms as CSV")
    p_sim.add_argument("--wav", default=None, help="write the siren audio as 16-bit WAV")
    p_sim.add_argument("--one-shot", dest="one_shot", action="store_true",
                       help="fixed-width trigger window instead of level-sensitive hold")
    p_sim.add_argument("--ideal-pair", dest="ideal_pair", default=None, metavar="F_LO,F_HI",
                       help="replace the control-pin siren model with two fixed tones")

    p_snap = sub.add_parser("snap", help="snap a value to a preferred series")
    p_snap.add_argument("--series", choices=("E6", "E12", "E24", "E96"), default="E12")
    p_snap.add_argument("--mode", choices=("nearest", "up", "down"), default="nearest")
    p_snap.add_argument("value")

    p_verify = sub.add_parser("verify", help="audit the reference design's worked figures")
    p_verify.add_argument("--circuit", default=None)
    p_verify.add_argument("--tolerance", type=float, default=None,
                          help="uniform relative tolerance overriding the per-entry defaults")

    p_tol = sub.add_parser("tolerance", help="Monte Carlo spread of the trigger timeout")
    p_tol.add_argument("--circuit", default=None)
    p_tol.add_argument("--tol", type=float, default=0.10)
    p_tol.add_argument("--runs", type=int, default=10000)
    p_tol.add_argument("--seed", type=int, default=0)

    return parser


def _load_spec(path: str | None) -> design.CircuitSpec:
    if path is None:
        return design.CircuitSpec()
    return design.parse_circuit(Path(path).read_text(encoding="utf-8"))


def _write_atomic(path: str, blob: bytes) -> None:
    target = Path(path)
    tmp = target.with_name(target.name + ".partial")
    tmp.write_bytes(blob)
    os.replace(tmp, target)


def _emit(blob: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.write(blob.decode("utf-8"))
    else:
        _write_atomic(out, blob)


def cmd_design(args) -> int:
    report = design.compute_report(_load_spec(args.circuit))
    _emit(export.write_report(report, args.format), args.out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.csv is None and args.wav is None:
        raise UsageError("nothing to write: pass --csv and/or --wav")
    ideal_pair = None
    if args.ideal_pair is not None:
        parts = args.ideal_pair.split(",")
        if len(parts) != 2:
            raise UsageError("--ideal-pair takes two frequencies, e.g. 470,490")
        try:
            ideal_pair = (parse_number(parts[0]), parse_number(parts[1]))
        except QuantityError as exc:
            raise UsageError(str(exc)) from exc
    spec = _load_spec(args.circuit)
    scenario = simulator.parse_scenario(Path(args.scenario).read_text(encoding="utf-8"))
    config = simulator.SimConfig(
        sample_rate=args.sample_rate,
        ideal_pair=ideal_pair,
        retrigger="one_shot" if args.one_shot else "level_sensitive",
    )
    trace = simulator.run(spec, scenario, config)

    outputs = []
    if args.csv is not None:
        outputs.append((args.csv, export.write_csv(trace)))
    if args.wav is not None:
        outputs.append((args.wav, export.write_wav(trace, export.WavParams(args.sample_rate))))
    for path, blob in outputs:
        _write_atomic(path, blob)

    sounding = format_quantity(Quantity(trace.sounding_seconds, "second"))
    sys.stdout.write(f"alarm_windows={len(trace.alarm_windows)} sounding={sounding}\n")
    return EXIT_OK


def cmd_snap(args) -> int:
    try:
        value = parse_number(args.value)
        snapped = snap_preferred(value, args.series, args.mode)
    except QuantityError as exc:
        raise UsageError(str(exc)) from exc
    sys.stdout.write(f"{format_number(value)} -> {format_number(snapped)}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.tolerance is not None and args.tolerance <= 0:
        raise UsageError("--tolerance must be > 0")
    report = design.compute_report(_load_spec(args.circuit))
    errata = design.verify_reference_values(report, args.tolerance)
    sys.stdout.write(export.write_report(errata, "text").decode("utf-8"))
    return EXIT_ERRATA if errata.has_errata else EXIT_OK


def cmd_tolerance(args) -> int:
    if args.runs < 1:
        raise UsageError("--runs must be >= 1")
    if not 0.0 < args.tol < 1.0:
        raise UsageError("--tol must be inside (0, 1)")
    spec = _load_spec(args.circuit)
    result = simulator.monte_carlo_timeout(spec, args.tol, args.runs, args.seed)
    contains = "true" if result.contains(simulator.MEASURED_TIMEOUT_SECONDS) else "false"

    def fmt(x: float) -> str:
        return format_quantity(Quantity(x, "second"), digits=6)

    sys.stdout.write(
        f"runs={result.runs} min={fmt(result.min)} mean={fmt(result.mean)} "
        f"max={fmt(result.max)} stddev={fmt(result.stddev)} contains_measured={contains}\n"
    )
    return EXIT_OK


_COMMANDS = {
    "design": cmd_design,
    "simulate": cmd_simulate,
    "snap": cmd_snap,
    "verify": cmd_verify,
    "tolerance": cmd_tolerance,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (export.ExportError, simulator.SimulationError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (design.CircuitFileError, simulator.ScenarioError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (design.DesignError, QuantityError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


def run() -> None:
    raise SystemExit(main())
