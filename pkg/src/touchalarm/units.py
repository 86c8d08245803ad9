"""Unit-tagged scalar quantities with SI-prefix text parsing/formatting,
plus the IEC 60063 preferred-value (E-series) tables and snapping."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

UNITS = ("ohm", "farad", "volt", "ampere", "second", "hertz", "watt", "dimensionless")

UNIT_SYMBOLS = {
    "ohm": "Ω",
    "farad": "F",
    "volt": "V",
    "ampere": "A",
    "second": "s",
    "hertz": "Hz",
    "watt": "W",
    "dimensionless": "",
}

# Accepted unit suffix spellings ("ohm" for plain-ASCII config files).
_UNIT_SPELLINGS = {
    "Ω": "ohm",
    "ohm": "ohm",
    "F": "farad",
    "V": "volt",
    "A": "ampere",
    "s": "second",
    "Hz": "hertz",
    "W": "watt",
}

# "u", "µ" (micro sign) and "μ" (Greek mu) all mean micro on input.
PREFIX_FACTORS = {
    "p": 1e-12,
    "n": 1e-9,
    "u": 1e-6,
    "µ": 1e-6,
    "μ": 1e-6,
    "m": 1e-3,
    "k": 1e3,
    "M": 1e6,
    "G": 1e9,
}

_OUTPUT_PREFIXES = {-12: "p", -9: "n", -6: "µ", -3: "m", 0: "", 3: "k", 6: "M", 9: "G"}

# These units never take a negative magnitude.
_NONNEGATIVE_UNITS = frozenset({"ohm", "farad", "hertz"})

ROUNDTRIP_RTOL = 1e-12

_NUMBER_RE = re.compile(r"^[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")

_UNIT_SPELLINGS_BY_LENGTH = sorted(_UNIT_SPELLINGS, key=len, reverse=True)


class QuantityError(ValueError):
    """Malformed quantity text, or a magnitude outside the unit's domain."""


@dataclass(frozen=True)
class Quantity:
    """A finite scalar tagged with one of the supported units."""

    magnitude: float
    unit: str

    def __post_init__(self) -> None:
        if self.unit not in UNITS:
            raise QuantityError(f"unknown unit tag {self.unit!r}")
        if not isinstance(self.magnitude, (int, float)) or not math.isfinite(self.magnitude):
            raise QuantityError(f"magnitude must be finite, got {self.magnitude!r}")
        if self.unit in _NONNEGATIVE_UNITS and self.magnitude < 0:
            raise QuantityError(f"{self.unit} magnitude must be >= 0, got {self.magnitude!r}")

    def __str__(self) -> str:
        return format_quantity(self)


def parse_quantity(text: str, expected_unit: str) -> Quantity:
    """Parse ``<decimal><SI prefix?><unit suffix?>`` into a Quantity.

    The unit suffix is optional but, when present, must agree with
    ``expected_unit`` ("220kΩ" parses as ohm, "220kF" does not).
    """
    if expected_unit not in UNITS:
        raise QuantityError(f"unknown unit tag {expected_unit!r}")
    s = text.strip()
    m = _NUMBER_RE.match(s)
    if m is None:
        raise QuantityError(f"malformed number in {text!r}")
    value = float(m.group(0))
    rest = s[m.end():]

    if rest:
        for spelling in _UNIT_SPELLINGS_BY_LENGTH:
            if rest.endswith(spelling):
                found = _UNIT_SPELLINGS[spelling]
                if found != expected_unit:
                    raise QuantityError(
                        f"unit suffix {spelling!r} in {text!r} conflicts with "
                        f"expected unit {expected_unit!r}"
                    )
                rest = rest[: -len(spelling)]
                break
    if rest:
        try:
            value *= PREFIX_FACTORS[rest]
        except KeyError:
            raise QuantityError(f"unknown SI prefix {rest!r} in {text!r}") from None

    return Quantity(value, expected_unit)


def parse_number(text: str) -> float:
    """Parse a bare number with an optional SI prefix (no unit suffix)."""
    s = text.strip()
    m = _NUMBER_RE.match(s)
    if m is None:
        raise QuantityError(f"malformed number in {text!r}")
    value = float(m.group(0))
    rest = s[m.end():]
    if rest:
        try:
            value *= PREFIX_FACTORS[rest]
        except KeyError:
            raise QuantityError(f"unknown SI prefix {rest!r} in {text!r}") from None
    return value


def format_number(x: float, digits: int | None = None) -> str:
    """Plain decimal without prefix or unit; shortest round-trip by default."""
    if x == 0:
        return "0"
    if digits is not None:
        return f"{x:.{digits}g}"
    return _shortest_digits(x, 1.0, x)


def format_quantity(q: Quantity, digits: int | None = None) -> str:
    """Shortest ``<decimal><prefix><unit>`` that re-parses to q within 1e-12.

    With ``digits`` set, the mantissa is fixed to that many significant
    digits instead (display use; not guaranteed to round-trip).
    Dimensionless values are printed as plain decimals, no prefix.
    """
    symbol = UNIT_SYMBOLS[q.unit]
    x = q.magnitude
    if x == 0:
        return "0" + symbol
    if q.unit == "dimensionless":
        return format_number(x, digits)

    exponent = int(math.floor(math.log10(abs(x)) / 3.0)) * 3
    exponent = min(9, max(-12, exponent))
    mantissa_str = _mantissa_for(x, exponent, digits)
    # Rounding can push the mantissa into the next prefix step (999.96 -> "1000").
    if abs(float(mantissa_str)) >= 1000.0 and exponent < 9:
        exponent += 3
        mantissa_str = _mantissa_for(x, exponent, digits)
    return mantissa_str + _OUTPUT_PREFIXES[exponent] + symbol


def _mantissa_for(x: float, exponent: int, digits: int | None) -> str:
    factor = PREFIX_FACTORS[_OUTPUT_PREFIXES[exponent]] if exponent else 1.0
    mantissa = x / factor
    if digits is not None:
        return f"{mantissa:.{digits}g}"
    return _shortest_digits(mantissa, factor, x)


def _shortest_digits(mantissa: float, factor: float, target: float) -> str:
    # Fewer digits than the integer part can only produce a longer
    # exponent-notation string, so start there.
    start = max(1, int(math.floor(math.log10(abs(mantissa)))) + 1) if mantissa else 1
    for precision in range(start, 18):
        s = f"{mantissa:.{precision}g}"
        if abs(float(s) * factor - target) <= ROUNDTRIP_RTOL * abs(target):
            return s
    return repr(mantissa)


# --- IEC 60063 preferred value series -----------------------------------------


@dataclass(frozen=True)
class ESeries:
    """One decade of preferred values, e.g. E12 = 1.0, 1.2, ... 8.2."""

    name: str
    mantissas: tuple[float, ...]

    def __post_init__(self) -> None:
        n = int(self.name[1:])
        if len(self.mantissas) != n:
            raise QuantityError(f"{self.name} must list {n} mantissas")
        for lo, hi in zip(self.mantissas, self.mantissas[1:]):
            if not lo < hi:
                raise QuantityError(f"{self.name} mantissas must be strictly increasing")
        if self.mantissas[0] < 1.0 or self.mantissas[-1] >= 10.0:
            raise QuantityError(f"{self.name} mantissas must lie in [1.0, 10.0)")


E6 = ESeries("E6", (1.0, 1.5, 2.2, 3.3, 4.7, 6.8))

E12 = ESeries("E12", (1.0, 1.2, 1.5, 1.8, 2.2, 2.7, 3.3, 3.9, 4.7, 5.6, 6.8, 8.2))

E24 = ESeries("E24", (
    1.0, 1.1, 1.2, 1.3, 1.5, 1.6, 1.8, 2.0, 2.2, 2.4, 2.7, 3.0,
    3.3, 3.6, 3.9, 4.3, 4.7, 5.1, 5.6, 6.2, 6.8, 7.5, 8.2, 9.1,
))

E96 = ESeries("E96", (
    1.00, 1.02, 1.05, 1.07, 1.10, 1.13, 1.15, 1.18, 1.21, 1.24, 1.27, 1.30,
    1.33, 1.37, 1.40, 1.43, 1.47, 1.50, 1.54, 1.58, 1.62, 1.65, 1.69, 1.74,
    1.78, 1.82, 1.87, 1.91, 1.96, 2.00, 2.05, 2.10, 2.15, 2.21, 2.26, 2.32,
    2.37, 2.43, 2.49, 2.55, 2.61, 2.67, 2.74, 2.80, 2.87, 2.94, 3.01, 3.09,
    3.16, 3.24, 3.32, 3.40, 3.48, 3.57, 3.65, 3.74, 3.83, 3.92, 4.02, 4.12,
    4.22, 4.32, 4.42, 4.53, 4.64, 4.75, 4.87, 4.99, 5.11, 5.23, 5.36, 5.49,
    5.62, 5.76, 5.90, 6.04, 6.19, 6.34, 6.49, 6.65, 6.81, 6.98, 7.15, 7.32,
    7.50, 7.68, 7.87, 8.06, 8.25, 8.45, 8.66, 8.87, 9.09, 9.31, 9.53, 9.76,
))

SERIES = {s.name: s for s in (E6, E12, E24, E96)}

SNAP_MODES = ("nearest", "up", "down")


def snap_preferred(x: float, series: ESeries | str = E12, mode: str = "nearest") -> float:
    """Snap x to a preferred value m × 10^k from the given series.

    nearest minimizes the relative error |candidate − x| / x with ties
    broken downward; up/down pick the closest member ≥ x / ≤ x.
    """
    if isinstance(series, str):
        try:
            series = SERIES[series]
        except KeyError:
            raise QuantityError(f"unknown series {series!r}") from None
    if mode not in SNAP_MODES:
        raise QuantityError(f"unknown snap mode {mode!r}")
    if not isinstance(x, (int, float)) or not math.isfinite(x) or x <= 0:
        raise QuantityError(f"snap needs a positive finite value, got {x!r}")

    # Building candidates from decimal strings keeps e.g. 4.7 × 10² exactly 470.0.
    decade = math.floor(math.log10(x))
    candidates = [
        float(f"{m:g}e{d}")
        for d in (decade - 1, decade, decade + 1)
        for m in series.mantissas
    ]
    candidates = [c for c in candidates if math.isfinite(c) and c > 0]
    if mode == "nearest":
        return min(candidates, key=lambda c: (abs(c - x) / x, c))
    if mode == "up":
        above = [c for c in candidates if c >= x]
        if not above:
            raise QuantityError(f"{x!r} is above the representable range")
        return min(above)
    below = [c for c in candidates if c <= x]
    if not below:
        raise QuantityError(f"{x!r} is below the representable range")
    return max(below)
