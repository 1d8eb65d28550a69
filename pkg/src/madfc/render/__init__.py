"""SVG chart rendering."""
from .charts import (
    Axis,
    ChartKind,
    ChartSpec,
    default_color_limit,
    ma_layout,
    render,
    render_box,
    render_errorbar,
    render_heatmap,
    render_ma,
    render_violin,
    render_volcano,
    value_limits,
    volcano_layout,
)
from .color import map_color, ramp, to_hex
from .svg import SvgDocument, fmt

__all__ = [
    "Axis", "ChartKind", "ChartSpec", "SvgDocument", "default_color_limit", "fmt",
    "ma_layout", "map_color", "ramp", "render", "render_box", "render_errorbar",
    "render_heatmap", "render_ma", "render_violin", "render_volcano", "to_hex",
    "value_limits", "volcano_layout",
]
