"""Diverging blue-white-red color mapping centered on "no change"."""
import math

from ..errors import DomainError
from ..transform import reference_coordinate, scale_forward

# ColorBrewer RdBu endpoints
NEGATIVE_COLOR = (0x21 / 255, 0x66 / 255, 0xAC / 255)
POSITIVE_COLOR = (0xB2 / 255, 0x18 / 255, 0x2B / 255)
NEUTRAL_COLOR = (1.0, 1.0, 1.0)


def ramp(t):
    """Color for a signed position ``t`` in [-1, 1]; 0 is white."""
    t = min(1.0, max(-1.0, t))
    end = POSITIVE_COLOR if t > 0 else NEGATIVE_COLOR
    w = abs(t)
    return tuple(n + w * (e - n) for n, e in zip(NEUTRAL_COLOR, end))


def color_position(fc, scale, limit):
    """Signed, clamped distance of ``fc`` from the reference, in units of ``limit``."""
    if not (math.isfinite(limit) and limit > 0):
        raise DomainError(f"color limit must be finite and > 0, got {limit!r}")
    offset = scale_forward(scale, fc) - reference_coordinate(scale)
    return min(limit, max(-limit, offset)) / limit


def map_color(fc, scale, limit):
    """RGB triple (floats in [0, 1]) for fold change ``fc``."""
    return ramp(color_position(fc, scale, limit))


def to_hex(rgb):
    return "#" + "".join(f"{round(c * 255):02x}" for c in rgb)
