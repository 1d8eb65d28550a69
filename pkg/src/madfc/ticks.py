"""Axis ticks and fold-change labels.

Tick positions live in transformed space; labels show the fold change each
position stands for. Values below one can be written three ways::

    decimal   0.33
    fraction  1/3
    exponent  3^-1

Values of one and above are written the same in every format.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import math
import re

import numpy as np

from .errors import DomainError, ParseError
from .transform import ScaleKind, scale_forward, scale_inverse, reference_coordinate

__all__ = [
    "LabelFormat",
    "TickSet",
    "generate_ticks",
    "format_label",
    "parse_label",
    "label_tolerance",
    "nice_ticks",
    "DEFAULT_DECIMAL_DIGITS",
    "MAX_DENOMINATOR",
]

DEFAULT_DECIMAL_DIGITS = 2
MAX_DENOMINATOR = 1000
# a reciprocal is treated as the integer d when |1/x - d| <= _RECIP_TOL * d
_RECIP_TOL = 1e-9


class LabelFormat(str, Enum):
    DECIMAL = "decimal"
    FRACTION = "fraction"
    EXPONENT = "exponent"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TickSet:
    positions: tuple
    labels: tuple
    format: LabelFormat
    scale: ScaleKind

    def __post_init__(self):
        if len(self.positions) != len(self.labels):
            raise ValueError("positions and labels differ in length")
        if any(b <= a for a, b in zip(self.positions, self.positions[1:])):
            raise ValueError("tick positions must be strictly increasing")

    def __iter__(self):
        return iter(zip(self.positions, self.labels))

    def __len__(self):
        return len(self.positions)


def _check_positive(x):
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"fold change must be finite and > 0, got {x!r}")


def _reciprocal_integer(x):
    d = 1.0 / x
    n = round(d)
    if n >= 1 and abs(d - n) <= _RECIP_TOL * d:
        return n
    return None


def _shortest(x):
    return np.format_float_positional(x, trim="-")


def format_label(x, label_format=LabelFormat.FRACTION, decimal_digits=DEFAULT_DECIMAL_DIGITS):
    """Render fold change ``x`` as an axis label."""
    x = float(x)
    _check_positive(x)
    label_format = LabelFormat(label_format)
    if x >= 1.0:
        return _shortest(x)
    if label_format is LabelFormat.DECIMAL:
        return np.format_float_positional(
            x, precision=decimal_digits, unique=False, fractional=False, trim="-")
    d = _reciprocal_integer(x)
    if label_format is LabelFormat.FRACTION:
        if d is not None:
            return f"1/{d}"
        frac = Fraction(x).limit_denominator(MAX_DENOMINATOR)
        if frac.numerator == 0:
            return f"1/{round(1.0 / x)}"
        return f"{frac.numerator}/{frac.denominator}"
    if d is not None:
        return f"{d}^-1"
    frac = Fraction(1.0 / x).limit_denominator(MAX_DENOMINATOR)
    return f"({frac.numerator}/{frac.denominator})^-1"


_NUMBER = r"\d+(?:\.\d*)?(?:[eE][+-]?\d+)?"
_PLAIN = re.compile(rf"^{_NUMBER}$")
_FRACTION = re.compile(r"^(\d+)/(\d+)$")
_EXPONENT = re.compile(rf"^({_NUMBER})\^-1$")
_PAREN_EXPONENT = re.compile(r"^\((\d+)/(\d+)\)\^-1$")


def parse_label(s):
    """Fold change denoted by a label from :func:`format_label`."""
    text = s.strip()
    value = None
    if m := _PLAIN.match(text):
        value = float(text)
    elif m := _FRACTION.match(text):
        num, den = int(m.group(1)), int(m.group(2))
        if den > 0:
            value = num / den
    elif m := _EXPONENT.match(text):
        base = float(m.group(1))
        if base > 0:
            value = 1.0 / base
    elif m := _PAREN_EXPONENT.match(text):
        num, den = int(m.group(1)), int(m.group(2))
        if num > 0:
            value = den / num
    if value is None or not math.isfinite(value) or value <= 0:
        raise ParseError(f"unrecognized fold-change label {s!r}")
    return value


def label_tolerance(x, label_format=LabelFormat.FRACTION,
                    decimal_digits=DEFAULT_DECIMAL_DIGITS):
    """Largest |parse_label(format_label(x)) - x| allowed by the printed precision."""
    x = float(x)
    _check_positive(x)
    exact = 1e-12 * x
    if x >= 1.0:
        return exact
    label_format = LabelFormat(label_format)
    if label_format is LabelFormat.DECIMAL:
        last_digit = math.floor(math.log10(x)) - decimal_digits + 1
        return 0.5 * 10.0 ** last_digit + exact
    if _reciprocal_integer(x) is not None:
        return _RECIP_TOL * x + exact
    if label_format is LabelFormat.FRACTION:
        frac = Fraction(x).limit_denominator(MAX_DENOMINATOR)
        if frac.numerator == 0:
            return 0.5 * x * x + exact
        return _farey_error(frac.denominator) + exact
    frac = Fraction(1.0 / x).limit_denominator(MAX_DENOMINATOR)
    err = _farey_error(frac.denominator)
    # label shows 1/frac; carry the error in 1/x over to x
    return x * err / max(1.0 / x - err, 1e-300) + exact


def _farey_error(q):
    """Bound on |y - p/q| when p/q = Fraction(y).limit_denominator(MAX_DENOMINATOR).

    The neighbouring Farey fraction c/d satisfies q + d > MAX_DENOMINATOR, and
    the two are 1/(q*d) apart.
    """
    return 1.0 / (q * max(MAX_DENOMINATOR + 1 - q, 1))


def _covering(lo, hi, step):
    """Index range of the multiples of ``step`` that cover [lo, hi]."""
    first = math.floor(lo / step + 1e-9)
    last = math.ceil(hi / step - 1e-9)
    return first, last


def _multiple(i, mantissa, exponent):
    # i * mantissa * 10**exponent, rounded once
    if exponent >= 0:
        return i * mantissa * 10 ** exponent
    return i * mantissa / 10 ** (-exponent)


def nice_ticks(lo, hi, target_count=6):
    """Evenly spaced round-number positions covering ``[lo, hi]``.

    Steps are drawn from {1, 2, 2.5, 5} x 10^k; the finest step giving at
    most ``target_count`` ticks wins.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
        raise DomainError(f"invalid tick range [{lo!r}, {hi!r}]")
    if target_count < 2:
        raise DomainError("target_count must be >= 2")
    exponent = math.floor(math.log10((hi - lo) / (target_count - 1))) - 1
    while True:
        for mantissa in (1, 2, 2.5, 5):
            step = mantissa * 10.0 ** exponent
            first, last = _covering(lo, hi, step)
            if last - first + 1 <= target_count:
                return [_multiple(i, mantissa, exponent) for i in range(first, last + 1)]
        exponent += 1


def _unit_steps():
    scale = 1
    while True:
        for m in (1, 2, 5):
            yield m * scale
        scale *= 10


def generate_ticks(scale, fc_min, fc_max, target_count=7,
                   label_format=LabelFormat.FRACTION,
                   decimal_digits=DEFAULT_DECIMAL_DIGITS):
    """Ticks covering the fold-change range ``[fc_min, fc_max]``.

    MAD-FC and log2 ticks sit on integer multiples of a step in transformed
    space (1, 2, 5, 10, ...). Linear ticks are round numbers on the raw
    fold-change axis; a tick at 1 is added when the range contains it.
    """
    scale = ScaleKind(scale)
    label_format = LabelFormat(label_format)
    fc_min, fc_max = float(fc_min), float(fc_max)
    _check_positive(fc_min)
    _check_positive(fc_max)
    if not fc_min < fc_max:
        raise DomainError(f"need fc_min < fc_max, got {fc_min!r} >= {fc_max!r}")
    if target_count < 3:
        raise DomainError(f"target_count must be >= 3, got {target_count}")

    lo, hi = scale_forward(scale, fc_min), scale_forward(scale, fc_max)
    if scale is ScaleKind.LINEAR:
        positions = [p for p in nice_ticks(lo, hi, target_count) if p > 0]
        ref = reference_coordinate(scale)
        if fc_min <= 1.0 <= fc_max and ref not in positions:
            step = positions[1] - positions[0] if len(positions) > 1 else 1.0
            positions = sorted([p for p in positions if abs(p - ref) >= 0.25 * step] + [ref])
    else:
        for step in _unit_steps():
            first, last = _covering(lo, hi, step)
            if last - first + 1 <= target_count:
                break
        positions = [float(i * step) for i in range(first, last + 1)]

    labels = [format_label(scale_inverse(scale, p), label_format, decimal_digits)
              for p in positions]
    return TickSet(tuple(float(p) for p in positions), tuple(labels), label_format, scale)
