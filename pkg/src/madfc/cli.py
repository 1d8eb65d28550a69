"""Command-line interface.

    madfc transform --value 0.25 --scale madfc        -> -3
    madfc inverse --value 0 --scale madfc             -> 1
    madfc ticks --min 0.25 --max 4 --format fraction
    madfc plot volcano --input de.csv --out volcano.svg
    madfc simulate fig5a --seed 0 --out boxes.csv

Exit status: 0 success, 1 data/domain/file errors, 2 usage errors.
Numbers go to stdout, warnings and errors to stderr.
"""
import argparse
import os
from pathlib import Path
import sys
import warnings

import numpy as np

from . import ingest, simulate
from .errors import MadfcError
from .ingest import fmt_number
from .render import ChartKind, ChartSpec, render
from .ticks import DEFAULT_DECIMAL_DIGITS, LabelFormat, generate_ticks
from .transform import DYNAMIC_RANGE_LIMIT, ScaleKind, exceeds_dynamic_range, scale_forward, \
    scale_inverse

SIMULATIONS = ("fig4a", "fig5a", "fig6a")


class CliError(Exception):
    """Data or file problem reported with exit status 1."""


def _scale_arg(p, required=False):
    p.add_argument("--scale", choices=[k.value for k in ScaleKind], default=ScaleKind.MADFC.value,
                   required=required, help="axis scale (default: %(default)s)")


def _format_arg(p):
    p.add_argument("--format", dest="label_format", choices=[f.value for f in LabelFormat],
                   default=LabelFormat.FRACTION.value,
                   help="label style for fold changes below 1 (default: %(default)s)")
    p.add_argument("--decimal-digits", type=int, default=DEFAULT_DECIMAL_DIGITS,
                   help="significant digits for decimal labels (default: %(default)s)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="madfc", description="Mirrored axis distortion of fold change (MAD-FC) tools.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("transform", help="fold change -> axis coordinate",
                       description="Print the axis coordinate of a fold change.")
    p.add_argument("--value", type=float, required=True, help="fold change (> 0)")
    _scale_arg(p)

    p = sub.add_parser("inverse", help="axis coordinate -> fold change",
                       description="Print the fold change at an axis coordinate.")
    p.add_argument("--value", type=float, required=True, help="axis coordinate")
    _scale_arg(p)

    p = sub.add_parser("ticks", help="print a tick table",
                       description="Print tab-separated tick positions and labels.")
    p.add_argument("--min", dest="fc_min", type=float, required=True, help="lowest fold change")
    p.add_argument("--max", dest="fc_max", type=float, required=True, help="highest fold change")
    p.add_argument("--count", type=int, default=7, help="maximum tick count (default: 7)")
    _scale_arg(p)
    _format_arg(p)

    p = sub.add_parser("plot", help="render a chart to SVG",
                       description="Render a chart from a CSV file to SVG.")
    p.add_argument("kind", choices=[k.value for k in ChartKind], help="chart type")
    p.add_argument("--input", required=True, help="input CSV path")
    p.add_argument("--out", required=True, help="output SVG path")
    _scale_arg(p)
    _format_arg(p)
    p.add_argument("--width", type=int, default=800, help="width in px (default: 800)")
    p.add_argument("--height", type=int, default=600, help="height in px (default: 600)")
    p.add_argument("--title", default="", help="chart title")
    p.add_argument("--delimiter", default=",", help="field delimiter (default: ',')")
    p.add_argument("--fc-column-mode", choices=["fc", "log2fc"], default="fc",
                   help="DE tables: fold change column holds raw or log2 values "
                        "(default: %(default)s)")

    p = sub.add_parser("simulate", help="write a synthetic dataset",
                       description="Write one of the synthetic datasets as CSV.")
    p.add_argument("dataset", choices=SIMULATIONS,
                   help="fig4a: intervals, fig5a: box summaries, fig6a: violin samples")
    p.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--groups", type=int, default=5,
                   help="group count for fig4a/fig6a (default: 5)")
    return parser


def _validate(parser, args):
    if getattr(args, "decimal_digits", 1) < 1:
        parser.error("--decimal-digits must be >= 1")
    if args.command == "ticks" and args.count < 3:
        parser.error("--count must be >= 3")
    if args.command == "plot":
        if args.width < 100 or args.height < 100:
            parser.error("--width and --height must be >= 100")
        if len(args.delimiter) != 1:
            parser.error("--delimiter must be a single character")
    if args.command == "simulate" and args.groups < 2:
        parser.error("--groups must be >= 2")
    out = getattr(args, "out", None)
    if out is not None:
        parent = Path(out).resolve().parent
        if not parent.is_dir() or not os.access(parent, os.W_OK):
            raise CliError(f"cannot write output {out!r}: directory {str(parent)!r} "
                           f"is missing or not writable")


def _read(path):
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read input {path!r}: {exc.strerror or exc}") from None


def _load(kind, args):
    data = _read(args.input)
    opts = dict(delimiter=args.delimiter, source=args.input)
    if kind in (ChartKind.VOLCANO, ChartKind.MA):
        table = ingest.parse_de_table(data, fc_column_mode=args.fc_column_mode, **opts)
        return table, [r.fc for r in table.records]
    if kind is ChartKind.ERRORBAR:
        groups = ingest.parse_interval_table(data, **opts)
        return groups, [v for g in groups for v in (g.lower_fc, g.point_fc, g.upper_fc)]
    if kind is ChartKind.HEATMAP:
        table = ingest.parse_heatmap_table(data, **opts)
        return table, [v for row in table.cells for v in row]
    if kind is ChartKind.BOX and not data.lstrip().startswith(b"gene"):
        summaries = ingest.parse_box_table(data, **opts)
        return summaries, [v for s in summaries for v in s.as_tuple()]
    matrix = ingest.parse_expression_matrix(data, **opts)
    return matrix, np.concatenate([s.values for _, _, s in matrix.cells()])


def _warn(message):
    print(f"warning: {message}", file=sys.stderr)


def _cmd_plot(args):
    kind = ChartKind(args.kind)
    spec = ChartSpec(kind, args.scale, args.label_format, args.width, args.height, args.title,
                     args.decimal_digits)
    data, fold_changes = _load(kind, args)
    if spec.scale is ScaleKind.MADFC and exceeds_dynamic_range(fold_changes):
        _warn(f"fold changes exceed {DYNAMIC_RANGE_LIMIT:g} MAD-FC units from no change; "
              f"a log2 scale may read better at this dynamic range")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        doc = render(data, spec)
    for w in caught:
        _warn(str(w.message))
    Path(args.out).write_bytes(doc.bytes)


def _cmd_simulate(args):
    if args.dataset == "fig4a":
        text = ingest.serialize_interval_table(
            simulate.simulate_interval_dataset(args.groups, args.seed))
    elif args.dataset == "fig5a":
        text = ingest.serialize_box_table(simulate.simulate_boxplot_dataset(args.seed))
    else:
        text = ingest.serialize_expression_matrix(
            simulate.simulate_violin_dataset(args.groups, seed=args.seed))
    Path(args.out).write_text(text, encoding="utf-8", newline="\n")


def _dispatch(args):
    if args.command == "transform":
        print(fmt_number(scale_forward(args.scale, args.value)))
    elif args.command == "inverse":
        print(fmt_number(scale_inverse(args.scale, args.value)))
    elif args.command == "ticks":
        ticks = generate_ticks(args.scale, args.fc_min, args.fc_max, args.count,
                               args.label_format, args.decimal_digits)
        print("position\tlabel")
        for pos, label in ticks:
            print(f"{fmt_number(pos)}\t{label}")
    elif args.command == "plot":
        _cmd_plot(args)
    else:
        _cmd_simulate(args)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        _validate(parser, args)
        _dispatch(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (CliError, MadfcError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
