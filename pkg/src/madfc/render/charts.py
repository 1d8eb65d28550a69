"""Chart renderers: volcano, MA, error bar, box, violin and heatmap.

Each renderer is a pure function of (data, spec). Output elements come in a
fixed order: data marks, then axes (frame, reference line, ticks), then text.
Fold-change axes are laid out in the transformed coordinates of
``spec.scale`` and labelled with the fold changes those coordinates denote.
"""
from dataclasses import dataclass
from enum import Enum
import warnings
from xml.sax.saxutils import escape

import numpy as np

from ..errors import RenderError
from ..ingest import ExpressionMatrix
from ..stats import FiveNumberSummary, kde_density, quantile_summary
from ..ticks import DEFAULT_DECIMAL_DIGITS, LabelFormat, generate_ticks, nice_ticks
from ..transform import ScaleKind, reference_coordinate, scale_forward, scale_inverse
from .color import map_color, ramp, to_hex
from .svg import SvgBuilder

__all__ = [
    "ChartKind",
    "ChartSpec",
    "Axis",
    "value_limits",
    "volcano_layout",
    "ma_layout",
    "render_volcano",
    "render_ma",
    "render_errorbar",
    "render_box",
    "render_violin",
    "render_heatmap",
    "render",
]

AXIS_PAD = 0.05
MARKER_RADIUS = 2.5
POINT_RADIUS = 4.0
VIOLIN_HALF_BAND = 0.4
BOX_HALF_BAND = 0.25
LEGEND_SWATCHES = 64
FONT_SIZE = 11

_SCALE_TITLES = {
    ScaleKind.LOG2: "fold change (log2 scale)",
    ScaleKind.LINEAR: "fold change (linear scale)",
    ScaleKind.MADFC: "fold change (MAD-FC scale)",
}


class ChartKind(str, Enum):
    VOLCANO = "volcano"
    MA = "ma"
    ERRORBAR = "errorbar"
    BOX = "box"
    VIOLIN = "violin"
    HEATMAP = "heatmap"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ChartSpec:
    kind: ChartKind
    scale: ScaleKind = ScaleKind.MADFC
    label_format: LabelFormat = LabelFormat.FRACTION
    width_px: int = 800
    height_px: int = 600
    title: str = ""
    decimal_digits: int = DEFAULT_DECIMAL_DIGITS
    tick_count: int = 11

    def __post_init__(self):
        object.__setattr__(self, "kind", ChartKind(self.kind))
        object.__setattr__(self, "scale", ScaleKind(self.scale))
        object.__setattr__(self, "label_format", LabelFormat(self.label_format))
        if self.width_px < 100 or self.height_px < 100:
            raise ValueError(f"chart must be at least 100x100 px, got "
                             f"{self.width_px}x{self.height_px}")
        if self.tick_count < 3:
            raise ValueError("tick_count must be >= 3")


@dataclass(frozen=True)
class Axis:
    """Linear map from data coordinates ``[lo, hi]`` to pixels ``[start, end]``."""

    lo: float
    hi: float
    start: float
    end: float

    def __call__(self, v):
        return self.start + (np.asarray(v, dtype=np.float64) - self.lo) * (
            (self.end - self.start) / (self.hi - self.lo))

    def px(self, v):
        return float(self(v))

    def contains(self, v, eps=1e-9):
        span = self.hi - self.lo
        return self.lo - eps * span <= v <= self.hi + eps * span


@dataclass(frozen=True)
class _Frame:
    left: float
    top: float
    right: float
    bottom: float


def _frame(spec, right_margin=30.0):
    return _Frame(80.0, 40.0, spec.width_px - right_margin, spec.height_px - 60.0)


def value_limits(scale, coords):
    """Axis limits in transformed space for the given data coordinates.

    The reference is always inside the range; MAD-FC and log2 axes are made
    symmetric about it. Limits are padded 5% of the span.
    """
    scale = ScaleKind(scale)
    coords = np.asarray(coords, dtype=np.float64)
    ref = reference_coordinate(scale)
    lo = min(float(coords.min()), ref) if coords.size else ref
    hi = max(float(coords.max()), ref) if coords.size else ref
    if scale is not ScaleKind.LINEAR:
        half = max(ref - lo, hi - ref) or 1.0
        lo, hi = ref - half, ref + half
    elif hi == lo:
        lo, hi = 0.0, 2.0
    pad = AXIS_PAD * (hi - lo)
    lo, hi = lo - pad, hi + pad
    if scale is ScaleKind.LINEAR:
        lo = max(lo, 0.0)
    return lo, hi


def _plain_limits(values):
    values = np.asarray(values, dtype=np.float64)
    lo, hi = float(values.min()), float(values.max())
    if hi == lo:
        lo, hi = lo - 0.5, hi + 0.5
    pad = AXIS_PAD * (hi - lo)
    return lo - pad, hi + pad


def _value_ticks(spec, axis):
    lo, hi = axis.lo, axis.hi
    if spec.scale is ScaleKind.LINEAR and lo <= 0:
        lo = hi * 1e-9
    ticks = generate_ticks(spec.scale, scale_inverse(spec.scale, lo),
                           scale_inverse(spec.scale, hi), spec.tick_count,
                           spec.label_format, spec.decimal_digits)
    return [(p, label) for p, label in ticks if axis.contains(p)]


def _plain_ticks(axis, count=6):
    out = []
    for p in nice_ticks(axis.lo, axis.hi, count):
        if axis.contains(p):
            out.append((p, np.format_float_positional(p, trim="-")))
    return out


def _label_markup(label):
    if label.endswith("^-1"):
        base = escape(label[:-3])
        return f'{base}<tspan dy="-4" font-size="8">-1</tspan>'
    return None


# -- shared drawing helpers -------------------------------------------------

class _Canvas:
    """Collects data, axis and label elements, then writes them in order."""

    def __init__(self, spec):
        self.spec = spec
        self.data = []
        self.axes = []
        self.labels = []

    def finish(self):
        svg = SvgBuilder(self.spec.width_px, self.spec.height_px, self.spec.title)
        for name, items in (("data", self.data), ("axes", self.axes), ("labels", self.labels)):
            svg.open("g", cls=name)
            for item in items:
                if item[0] == "open":
                    svg.open(item[1], **item[2])
                elif item[0] == "close":
                    svg.close(item[1])
                else:
                    _, tag, text, markup, attrs = item
                    svg.element(tag, text=text, markup=markup, **attrs)
            svg.close("g")
        return svg.finish()

    @staticmethod
    def _el(tag, text=None, markup=None, **attrs):
        return ("el", tag, text, markup, attrs)

    def mark(self, tag, **attrs):
        self.data.append(self._el(tag, **attrs))

    def open_group(self, **attrs):
        self.data.append(("open", "g", attrs))

    def close_group(self):
        self.data.append(("close", "g"))

    def axis_el(self, tag, **attrs):
        self.axes.append(self._el(tag, **attrs))

    def text(self, x, y, text, anchor="middle", markup=None, **attrs):
        self.labels.append(self._el("text", text=text, markup=markup, x=x, y=y,
                                    text_anchor=anchor, font_size=FONT_SIZE,
                                    font_family="sans-serif", **attrs))


def _frame_rect(canvas, fr):
    canvas.axis_el("rect", cls="frame", x=fr.left, y=fr.top, width=fr.right - fr.left,
                   height=fr.bottom - fr.top, fill="none", stroke="#000000")


def _x_ticks(canvas, fr, axis, ticks, tick_labels=True):
    for p, label in ticks:
        x = axis.px(p)
        canvas.axis_el("line", cls="tick", x1=x, y1=fr.bottom, x2=x, y2=fr.bottom + 5,
                       stroke="#000000")
        if tick_labels:
            canvas.text(x, fr.bottom + 18, label, markup=_label_markup(label))


def _y_ticks(canvas, fr, axis, ticks):
    for p, label in ticks:
        y = axis.px(p)
        canvas.axis_el("line", cls="tick", x1=fr.left - 5, y1=y, x2=fr.left, y2=y,
                       stroke="#000000")
        canvas.text(fr.left - 8, y + 4, label, anchor="end", markup=_label_markup(label))


def _titles(canvas, fr, xlabel, ylabel):
    spec = canvas.spec
    if spec.title:
        canvas.text(spec.width_px / 2, 24, spec.title, cls="title")
    if xlabel:
        canvas.text((fr.left + fr.right) / 2, spec.height_px - 18, xlabel, cls="xlabel")
    if ylabel:
        cy = (fr.top + fr.bottom) / 2
        canvas.text(20, cy, ylabel, cls="ylabel", transform=f"rotate(-90 20 {cy:.3f})")


def _category_labels(canvas, fr, centers, labels):
    for cx, label in zip(centers, labels):
        canvas.text(cx, fr.bottom + 18, label, cls="category")


def _bands(fr, n):
    band = (fr.right - fr.left) / n
    return band, [fr.left + (i + 0.5) * band for i in range(n)]


def _check_kind(spec, kind):
    if spec.kind is not kind:
        raise RenderError(f"spec.kind is {spec.kind.value!r}, expected {kind.value!r}")


# -- volcano / MA -----------------------------------------------------------

def _p_values(table):
    p = np.array([r.p_value for r in table.records], dtype=np.float64)
    zero = p <= 0
    if zero.any():
        positive = p[~zero]
        floor = float(positive.min()) if positive.size else float(np.finfo(float).tiny)
        warnings.warn(f"{int(zero.sum())} p-value(s) of 0 clamped to {floor!r}",
                      RuntimeWarning, stacklevel=3)
        p = np.where(zero, floor, p)
    return p


@dataclass(frozen=True)
class _ScatterLayout:
    frame: _Frame
    x: Axis
    y: Axis
    xs: np.ndarray
    ys: np.ndarray


def volcano_layout(table, spec):
    """Axes and data coordinates of a volcano plot (before pixel rounding)."""
    if not len(table):
        raise RenderError("cannot draw a volcano plot of an empty table")
    fr = _frame(spec)
    xs = scale_forward(spec.scale, np.array([r.fc for r in table.records]))
    ys = -np.log10(_p_values(table))
    xlo, xhi = value_limits(spec.scale, xs)
    ymax = float(ys.max()) * (1 + AXIS_PAD) or 1.0
    return _ScatterLayout(fr, Axis(xlo, xhi, fr.left, fr.right),
                          Axis(0.0, ymax, fr.bottom, fr.top), xs, ys)


def ma_layout(table, spec):
    """Axes and data coordinates of an MA plot (before pixel rounding)."""
    if not len(table):
        raise RenderError("cannot draw an MA plot of an empty table")
    fr = _frame(spec)
    xs = np.log10(np.array([r.base_mean for r in table.records]) + 1.0)
    ys = scale_forward(spec.scale, np.array([r.fc for r in table.records]))
    xlo, xhi = _plain_limits(xs)
    ylo, yhi = value_limits(spec.scale, ys)
    return _ScatterLayout(fr, Axis(xlo, xhi, fr.left, fr.right),
                          Axis(ylo, yhi, fr.bottom, fr.top), xs, ys)


def _scatter(canvas, layout):
    for x, y in zip(layout.x(layout.xs), layout.y(layout.ys)):
        canvas.mark("circle", cls="marker", cx=float(x), cy=float(y), r=MARKER_RADIUS,
                    fill="#333333", fill_opacity=0.6)


def render_volcano(table, spec):
    """Significance (-log10 p) against fold change."""
    _check_kind(spec, ChartKind.VOLCANO)
    lay = volcano_layout(table, spec)
    fr, canvas = lay.frame, _Canvas(spec)
    _scatter(canvas, lay)
    _frame_rect(canvas, fr)
    xref = lay.x.px(reference_coordinate(spec.scale))
    canvas.axis_el("line", cls="reference", x1=xref, y1=fr.top, x2=xref, y2=fr.bottom,
                   stroke="#888888", stroke_dasharray="4 3")
    _x_ticks(canvas, fr, lay.x, _value_ticks(spec, lay.x))
    _y_ticks(canvas, fr, lay.y, _plain_ticks(lay.y))
    _titles(canvas, fr, _SCALE_TITLES[spec.scale], "-log10(p-value)")
    return canvas.finish()


def render_ma(table, spec):
    """Fold change against log10(mean count + 1)."""
    _check_kind(spec, ChartKind.MA)
    lay = ma_layout(table, spec)
    fr, canvas = lay.frame, _Canvas(spec)
    _scatter(canvas, lay)
    _frame_rect(canvas, fr)
    yref = lay.y.px(reference_coordinate(spec.scale))
    canvas.axis_el("line", cls="reference", x1=fr.left, y1=yref, x2=fr.right, y2=yref,
                   stroke="#888888", stroke_dasharray="4 3")
    _x_ticks(canvas, fr, lay.x, _plain_ticks(lay.x))
    _y_ticks(canvas, fr, lay.y, _value_ticks(spec, lay.y))
    _titles(canvas, fr, "log10(mean count + 1)", _SCALE_TITLES[spec.scale])
    return canvas.finish()


# -- categorical charts ------------------------------------------------------

def _categorical_axes(canvas, spec, fr, yaxis, centers, labels):
    _frame_rect(canvas, fr)
    yref = yaxis.px(reference_coordinate(spec.scale))
    canvas.axis_el("line", cls="reference", x1=fr.left, y1=yref, x2=fr.right, y2=yref,
                   stroke="#888888", stroke_dasharray="4 3")
    _y_ticks(canvas, fr, yaxis, _value_ticks(spec, yaxis))
    _category_labels(canvas, fr, centers, labels)
    _titles(canvas, fr, "", _SCALE_TITLES[spec.scale])


def render_errorbar(groups, spec):
    """Point estimates with interval bars, one category per group."""
    _check_kind(spec, ChartKind.ERRORBAR)
    groups = list(groups)
    if not groups:
        raise RenderError("cannot draw an error-bar chart without groups")
    fr, canvas = _frame(spec), _Canvas(spec)
    coords = [scale_forward(spec.scale, np.array([g.lower_fc, g.point_fc, g.upper_fc]))
              for g in groups]
    ylo, yhi = value_limits(spec.scale, np.concatenate(coords))
    yaxis = Axis(ylo, yhi, fr.bottom, fr.top)
    band, centers = _bands(fr, len(groups))
    cap = 0.15 * band
    for g, (lo, pt, hi), cx in zip(groups, coords, centers):
        y_lo, y_pt, y_hi = yaxis.px(lo), yaxis.px(pt), yaxis.px(hi)
        canvas.open_group(cls="errorbar", data_label=g.label)
        canvas.mark("line", cls="interval", x1=cx, y1=y_lo, x2=cx, y2=y_hi, stroke="#333333",
                    stroke_width=1.5)
        for y in (y_lo, y_hi):
            canvas.mark("line", cls="cap", x1=cx - cap / 2, y1=y, x2=cx + cap / 2, y2=y,
                        stroke="#333333", stroke_width=1.5)
        canvas.mark("circle", cls="point", cx=cx, cy=y_pt, r=POINT_RADIUS, fill="#1f77b4")
        canvas.close_group()
    _categorical_axes(canvas, spec, fr, yaxis, centers, [g.label for g in groups])
    return canvas.finish()


def _box_summaries(data):
    if isinstance(data, ExpressionMatrix):
        return [quantile_summary(s, label=f"{gene} {group}" if len(data.gene_labels) > 1
                                 else group)
                for gene, group, s in data.cells()]
    out = list(data)
    if not all(isinstance(s, FiveNumberSummary) for s in out):
        raise RenderError("box plot input must be an ExpressionMatrix or FiveNumberSummary list")
    return out


def render_box(data, spec):
    """Box-and-whisker glyphs: whiskers at min/max, box at q1/q3, median line."""
    _check_kind(spec, ChartKind.BOX)
    summaries = _box_summaries(data)
    if not summaries:
        raise RenderError("cannot draw a box plot without groups")
    fr, canvas = _frame(spec), _Canvas(spec)
    coords = [scale_forward(spec.scale, np.array(s.as_tuple())) for s in summaries]
    ylo, yhi = value_limits(spec.scale, np.concatenate(coords))
    yaxis = Axis(ylo, yhi, fr.bottom, fr.top)
    band, centers = _bands(fr, len(summaries))
    half = BOX_HALF_BAND * band
    for s, c, cx in zip(summaries, coords, centers):
        y_min, y_q1, y_med, y_q3, y_max = (yaxis.px(v) for v in c)
        canvas.open_group(cls="box-group", data_label=s.label)
        canvas.mark("line", cls="whisker", x1=cx, y1=y_q1, x2=cx, y2=y_min, stroke="#333333")
        canvas.mark("line", cls="whisker", x1=cx, y1=y_q3, x2=cx, y2=y_max, stroke="#333333")
        canvas.mark("rect", cls="box", x=cx - half, y=y_q3, width=2 * half, height=y_q1 - y_q3,
                    fill="#9ecae1", stroke="#333333")
        canvas.mark("line", cls="median", x1=cx - half, y1=y_med, x2=cx + half, y2=y_med,
                    stroke="#000000", stroke_width=2)
        canvas.close_group()
    _categorical_axes(canvas, spec, fr, yaxis, centers, [s.label for s in summaries])
    return canvas.finish()


def render_violin(matrix, spec):
    """Mirrored density outlines; widths share one maximum across groups."""
    _check_kind(spec, ChartKind.VIOLIN)
    cells = list(matrix.cells())
    if not cells:
        raise RenderError("cannot draw a violin plot without groups")
    curves = [kde_density(s, spec.scale) for _, _, s in cells]
    labels = [group if len(matrix.gene_labels) == 1 else f"{gene} {group}"
              for gene, group, _ in cells]
    fr, canvas = _frame(spec), _Canvas(spec)
    ylo, yhi = value_limits(spec.scale, np.concatenate([c.grid for c in curves]))
    yaxis = Axis(ylo, yhi, fr.bottom, fr.top)
    band, centers = _bands(fr, len(cells))
    peak = max(float(c.density.max()) for c in curves)
    for label, curve, cx in zip(labels, curves, centers):
        widths = curve.density / peak * (VIOLIN_HALF_BAND * band)
        ys = yaxis(curve.grid)
        right = [f"{cx + w:.3f},{y:.3f}" for w, y in zip(widths, ys)]
        left = [f"{cx - w:.3f},{y:.3f}" for w, y in zip(widths[::-1], ys[::-1])]
        canvas.open_group(cls="violin-group", data_label=label)
        canvas.mark("polygon", cls="violin", points=" ".join(right + left), fill="#9ecae1",
                    stroke="#333333")
        canvas.close_group()
    _categorical_axes(canvas, spec, fr, yaxis, centers, labels)
    return canvas.finish()


# -- heatmap -----------------------------------------------------------------

def default_color_limit(table, scale):
    """Largest distance of any cell from the reference, in transformed units."""
    coords = scale_forward(scale, np.array(table.cells, dtype=np.float64))
    return float(np.abs(coords - reference_coordinate(scale)).max()) or 1.0


def render_heatmap(table, spec, limit=None):
    """Cells colored by fold change with a labelled color bar."""
    _check_kind(spec, ChartKind.HEATMAP)
    if not table.cells or not table.column_labels:
        raise RenderError("cannot draw an empty heatmap")
    limit = default_color_limit(table, spec.scale) if limit is None else float(limit)
    fr, canvas = _frame(spec, right_margin=130.0), _Canvas(spec)
    nrow, ncol = len(table.row_labels), len(table.column_labels)
    cw, ch = (fr.right - fr.left) / ncol, (fr.bottom - fr.top) / nrow
    for i, row in enumerate(table.cells):
        for j, fc in enumerate(row):
            canvas.mark("rect", cls="cell", x=fr.left + j * cw, y=fr.top + i * ch, width=cw,
                        height=ch, fill=to_hex(map_color(fc, spec.scale, limit)))
    _frame_rect(canvas, fr)
    for i, label in enumerate(table.row_labels):
        canvas.text(fr.left - 6, fr.top + (i + 0.5) * ch + 4, label, anchor="end",
                    cls="row-label")
    for j, label in enumerate(table.column_labels):
        canvas.text(fr.left + (j + 0.5) * cw, fr.bottom + 18, label, cls="column-label")

    # color bar
    ref = reference_coordinate(spec.scale)
    bar = Axis(ref - limit, ref + limit, fr.bottom, fr.top)
    bx, bw = fr.right + 30, 16.0
    step = 2 * limit / LEGEND_SWATCHES
    for k in range(LEGEND_SWATCHES):
        lo = ref - limit + k * step
        y_top = bar.px(lo + step)
        canvas.axis_el("rect", cls="legend-swatch", x=bx, y=y_top, width=bw,
                       height=bar.px(lo) - y_top,
                       fill=to_hex(ramp((lo + step / 2 - ref) / limit)))
    canvas.axis_el("rect", cls="legend-frame", x=bx, y=fr.top, width=bw,
                   height=fr.bottom - fr.top, fill="none", stroke="#000000")
    lo_fc_coord = bar.lo
    if spec.scale is ScaleKind.LINEAR and lo_fc_coord <= 0:
        lo_fc_coord = bar.hi * 1e-9
    ticks = generate_ticks(spec.scale, scale_inverse(spec.scale, lo_fc_coord),
                           scale_inverse(spec.scale, bar.hi), spec.tick_count,
                           spec.label_format, spec.decimal_digits)
    for p, label in ticks:
        if not bar.contains(p):
            continue
        y = bar.px(p)
        canvas.axis_el("line", cls="tick", x1=bx + bw, y1=y, x2=bx + bw + 4, y2=y,
                       stroke="#000000")
        canvas.text(bx + bw + 7, y + 4, label, anchor="start", markup=_label_markup(label))
    _titles(canvas, fr, "", "")
    return canvas.finish()


_RENDERERS = {
    ChartKind.VOLCANO: render_volcano,
    ChartKind.MA: render_ma,
    ChartKind.ERRORBAR: render_errorbar,
    ChartKind.BOX: render_box,
    ChartKind.VIOLIN: render_violin,
    ChartKind.HEATMAP: render_heatmap,
}


def render(data, spec):
    """Dispatch on ``spec.kind``."""
    return _RENDERERS[spec.kind](data, spec)

