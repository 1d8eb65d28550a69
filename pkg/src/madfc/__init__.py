"""Mirrored axis distortion of fold change (MAD-FC).

Transforms fold changes so that 2 and 1/2 sit one unit either side of "no
change", builds readable axis labels for the transformed space, and renders
volcano, MA, error-bar, box, violin and heatmap charts as SVG under log2,
linear or MAD-FC scales.
"""
from ._backend import BACKEND
from .errors import (
    DegenerateInputError,
    DomainError,
    MadfcError,
    ParseError,
    RenderError,
    UndefinedRegionError,
)
from .ticks import LabelFormat, TickSet, format_label, generate_ticks, parse_label
from .transform import (
    ScaleKind,
    contraction_transform,
    inverse_contraction,
    inverse_mirror,
    mad_forward,
    mad_inverse,
    mirror_transform,
    reference_coordinate,
    scale_forward,
    scale_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DegenerateInputError",
    "DomainError",
    "LabelFormat",
    "MadfcError",
    "ParseError",
    "RenderError",
    "ScaleKind",
    "TickSet",
    "UndefinedRegionError",
    "contraction_transform",
    "format_label",
    "generate_ticks",
    "inverse_contraction",
    "inverse_mirror",
    "mad_forward",
    "mad_inverse",
    "mirror_transform",
    "parse_label",
    "reference_coordinate",
    "scale_forward",
    "scale_inverse",
]
