"""Bit-exact emitters for traces and reports: CSV, 16-bit PCM WAV, text/kv.

Everything here is a pure function from immutable inputs to bytes, so
repeated exports are byte-identical and safe to golden-test.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .design import DesignReport, ErrataReport
from .simulator import Trace
from .units import Quantity, format_quantity

CSV_HEADER = "t,supply_on,trigger_out,modulator_high,carrier_freq,speaker"

# 16-bit full scale with 10% headroom: floor(0.9 * 32767).
WAV_FULL_SCALE = 29490

_WAV_RATE_RANGE = (8000, 192000)


class ExportError(ValueError):
    """Export parameters do not fit the data being written."""


@dataclass(frozen=True)
class WavParams:
    sample_rate: int
    channels: int = 1
    bits_per_sample: int = 16

    def __post_init__(self) -> None:
        if not isinstance(self.sample_rate, int) or not (
            _WAV_RATE_RANGE[0] <= self.sample_rate <= _WAV_RATE_RANGE[1]
        ):
            raise ExportError(
                f"sample_rate must be an integer in {_WAV_RATE_RANGE}, got {self.sample_rate!r}"
            )
        if self.channels != 1:
            raise ExportError("only mono output is supported")
        if self.bits_per_sample != 16:
            raise ExportError("only 16-bit PCM output is supported")


def write_csv(trace: Trace) -> bytes:
    """Waveform table: time to 9 decimals, booleans as 0/1, floats as repr."""
    lines = [CSV_HEADER]
    times = trace.times
    supply = trace.supply_on
    trigger = trace.trigger_out
    modulator = trace.modulator_high
    carrier = trace.carrier_freq
    speaker = trace.speaker
    for i in range(trace.n_samples):
        lines.append(
            f"{times[i]:.9f},{int(supply[i])},{int(trigger[i])},{int(modulator[i])},"
            f"{float(carrier[i])!r},{float(speaker[i])!r}"
        )
    lines.append("")  # trailing LF
    return "\n".join(lines).encode("utf-8")


def write_wav(trace: Trace, params: WavParams | None = None) -> bytes:
    """Canonical 44-byte RIFF/WAVE header plus little-endian PCM samples.

    The speaker amplitude maps to ±WAV_FULL_SCALE; silence stays at 0.
    """
    if params is None:
        params = WavParams(int(trace.sample_rate))
    if params.sample_rate != trace.sample_rate:
        raise ExportError(
            f"params sample_rate {params.sample_rate} != trace sample_rate {trace.sample_rate}"
        )
    if trace.amplitude > 0:
        scaled = np.rint(WAV_FULL_SCALE * trace.speaker / trace.amplitude)
    else:
        scaled = np.zeros(trace.n_samples)
    data = np.clip(scaled, -32768, 32767).astype("<i2").tobytes()

    block_align = params.channels * params.bits_per_sample // 8
    header = struct.pack(
        "<4sI4s4sIHHIIHH4sI",
        b"RIFF",
        36 + len(data),
        b"WAVE",
        b"fmt ",
        16,  # fmt chunk size
        1,  # PCM
        params.channels,
        params.sample_rate,
        params.sample_rate * block_align,
        block_align,
        params.bits_per_sample,
        b"data",
        len(data),
    )
    return header + data


def write_report(report: DesignReport | ErrataReport, format: str = "text") -> bytes:
    """Render a report as an aligned text table or stable ``name=value`` lines."""
    if format not in ("text", "kv"):
        raise ExportError(f"format must be 'text' or 'kv', got {format!r}")
    if isinstance(report, DesignReport):
        text = _design_kv(report) if format == "kv" else _design_text(report)
    elif isinstance(report, ErrataReport):
        text = _errata_kv(report) if format == "kv" else _errata_text(report)
    else:
        raise ExportError(f"cannot render {type(report).__name__}")
    return text.encode("utf-8")


def _snapped_name(name: str) -> str:
    return name[: -len("_ideal")] + "_snapped" if name.endswith("_ideal") else name + "_snapped"


def _design_kv(report: DesignReport) -> str:
    lines = []
    for record in report:
        lines.append(f"{record.name}={format_quantity(record.ideal_quantity())}")
        if record.snapped is not None:
            lines.append(
                f"{_snapped_name(record.name)}={format_quantity(record.snapped_quantity())}"
            )
    return "\n".join(lines) + "\n"


def _design_text(report: DesignReport) -> str:
    rows = [("quantity", "ideal", "snapped", "formula")]
    for record in report:
        snapped = "-" if record.snapped is None else format_quantity(
            record.snapped_quantity(), digits=6
        )
        rows.append(
            (record.name, format_quantity(record.ideal_quantity(), digits=6),
             snapped, record.formula)
        )
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    lines = [
        f"{name:<{widths[0]}}  {ideal:>{widths[1]}}  {snapped:>{widths[2]}}  {formula}".rstrip()
        for name, ideal, snapped, formula in rows
    ]
    return "\n".join(lines) + "\n"


def _errata_kv(report: ErrataReport) -> str:
    if not report.entries:
        return "no entries\n"
    return "\n".join(f"{entry.name}={entry.verdict}" for entry in report) + "\n"


def _errata_text(report: ErrataReport) -> str:
    if not report.entries:
        return "no entries\n"
    rows = []
    for entry in report:
        comparison = (
            f"{format_quantity(Quantity(entry.computed, entry.unit), digits=6)}"
            f" vs claimed {format_quantity(Quantity(entry.claimed, entry.unit), digits=6)}"
        )
        rows.append((entry.name, comparison, entry.verdict, f"(tol {entry.tolerance * 100:g}%)"))
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    lines = [
        f"{name:<{widths[0]}}  {comparison:<{widths[1]}}  {verdict:<{widths[2]}}  {tol}"
        for name, comparison, verdict, tol in rows
    ]
    return "\n".join(lines) + "\n"
