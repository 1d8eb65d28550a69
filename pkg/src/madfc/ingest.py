"""Readers and writers for the delimited table formats.

Schemas (header row required, 1-based row numbers count the header as row 1)::

    DE table            id,fc,pvalue,basemean        (or id,log2fc,pvalue,basemean)
    expression matrix   gene,group,s1,...,sN
    heatmap             row,<column labels...>
    interval summary    label,point_fc,lower_fc,upper_fc,interval_kind
    box summary         label,min,q1,median,q3,max

Parsers reject bad input instead of coercing it: every row must have every
column, numbers must be finite, fold changes positive.
"""
from dataclasses import dataclass, field
import csv
import io
import math

from .errors import ParseError
from .stats import FiveNumberSummary, GroupSummary, SampleSet

__all__ = [
    "DERecord",
    "DETable",
    "ExpressionMatrix",
    "HeatmapTable",
    "parse_de_table",
    "parse_expression_matrix",
    "parse_heatmap_table",
    "parse_interval_table",
    "parse_box_table",
    "serialize_de_table",
    "serialize_expression_matrix",
    "serialize_heatmap_table",
    "serialize_interval_table",
    "serialize_box_table",
    "fmt_number",
    "DE_HEADER_FC",
    "DE_HEADER_LOG2FC",
]

DE_HEADER_FC = ("id", "fc", "pvalue", "basemean")
DE_HEADER_LOG2FC = ("id", "log2fc", "pvalue", "basemean")
INTERVAL_HEADER = ("label", "point_fc", "lower_fc", "upper_fc", "interval_kind")
BOX_HEADER = ("label", "min", "q1", "median", "q3", "max")


@dataclass(frozen=True)
class DERecord:
    """One row of a differential-expression table.

    ``p_value`` may be exactly 0 for in-memory tables (underflow in upstream
    tools); the volcano renderer clamps it. Parsed tables never contain 0.
    """

    id: str
    fc: float
    p_value: float
    base_mean: float

    def __post_init__(self):
        if not (math.isfinite(self.fc) and self.fc > 0):
            raise ValueError(f"{self.id}: fold change must be finite and > 0")
        if not 0 <= self.p_value <= 1:
            raise ValueError(f"{self.id}: p-value must lie in [0, 1]")
        if not (math.isfinite(self.base_mean) and self.base_mean >= 0):
            raise ValueError(f"{self.id}: base mean must be finite and >= 0")


@dataclass(frozen=True)
class DETable:
    records: tuple
    source: str = ""

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        seen = set()
        for rec in self.records:
            if rec.id in seen:
                raise ValueError(f"duplicate id {rec.id!r}")
            seen.add(rec.id)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


@dataclass(frozen=True)
class ExpressionMatrix:
    """Per (gene, group) cells of fold-change samples, in file order."""

    gene_labels: tuple
    group_labels: tuple
    samples: dict = field(compare=True)

    def cells(self):
        """Yield ``(gene, group, SampleSet)`` in gene-major order."""
        for gene in self.gene_labels:
            for group in self.group_labels:
                yield gene, group, self.samples[gene, group]


@dataclass(frozen=True)
class HeatmapTable:
    row_labels: tuple
    column_labels: tuple
    cells: tuple

    def __post_init__(self):
        cells = tuple(tuple(float(v) for v in row) for row in self.cells)
        if len(cells) != len(self.row_labels):
            raise ValueError("row count does not match row labels")
        for row in cells:
            if len(row) != len(self.column_labels):
                raise ValueError("heatmap is not rectangular")
            if not all(math.isfinite(v) and v > 0 for v in row):
                raise ValueError("heatmap cells must be finite and > 0")
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "column_labels", tuple(self.column_labels))


def fmt_number(x):
    """Shortest text that round-trips the float exactly, without a trailing '.0'."""
    text = repr(float(x))
    return text[:-2] if text.endswith(".0") else text


def _rows(data, delimiter, source):
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8 ({exc})", source=source) from None
    reader = csv.reader(io.StringIO(data, newline=""), delimiter=delimiter, strict=True)
    try:
        rows = list(reader)
    except csv.Error as exc:
        raise ParseError(str(exc), row=reader.line_num, source=source) from None
    if not rows:
        raise ParseError("empty input, header row missing", row=1, source=source)
    return rows


def _check_width(row, width, rownum, source):
    if not row:
        raise ParseError("blank line", row=rownum, source=source)
    if len(row) != width:
        raise ParseError(f"expected {width} fields, found {len(row)}", row=rownum, source=source)


def _number(text, rownum, col, name, source):
    if text.strip() == "":
        raise ParseError(f"empty cell in '{name}'", row=rownum, column=col, source=source)
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"'{name}' is not numeric: {text!r}", row=rownum, column=col,
                         source=source) from None
    if not math.isfinite(value):
        raise ParseError(f"'{name}' is not finite: {text!r}", row=rownum, column=col, source=source)
    return value


def _label(text, rownum, col, name, source):
    if text.strip() == "":
        raise ParseError(f"empty '{name}'", row=rownum, column=col, source=source)
    return text


def _positive(text, rownum, col, name, source):
    value = _number(text, rownum, col, name, source)
    if value <= 0:
        raise ParseError(f"'{name}' must be > 0, got {text!r}", row=rownum, column=col,
                         source=source)
    return value


def _expect_header(header, expected, source):
    if tuple(header) != tuple(expected):
        raise ParseError(f"header must be {','.join(expected)!r}, got {','.join(header)!r}",
                         row=1, source=source)


def parse_de_table(data, delimiter=",", fc_column_mode="fc", source=""):
    """Parse a differential-expression table.

    ``fc_column_mode`` is ``"fc"`` (raw fold change) or ``"log2fc"``
    (stored as log2, converted with ``2 ** value``).
    """
    if fc_column_mode not in ("fc", "log2fc"):
        raise ValueError(f"fc_column_mode must be 'fc' or 'log2fc', got {fc_column_mode!r}")
    rows = _rows(data, delimiter, source)
    expected = DE_HEADER_FC if fc_column_mode == "fc" else DE_HEADER_LOG2FC
    _expect_header(rows[0], expected, source)
    records, seen = [], {}
    for rownum, row in enumerate(rows[1:], start=2):
        _check_width(row, 4, rownum, source)
        gene = _label(row[0], rownum, 1, "id", source)
        if gene in seen:
            raise ParseError(f"duplicate id {gene!r} (first seen in row {seen[gene]})",
                             row=rownum, column=1, source=source)
        seen[gene] = rownum
        if fc_column_mode == "fc":
            fc = _positive(row[1], rownum, 2, "fc", source)
        else:
            fc = 2.0 ** _number(row[1], rownum, 2, "log2fc", source)
            if not (math.isfinite(fc) and fc > 0):
                raise ParseError(f"log2fc {row[1]!r} overflows", row=rownum, column=2,
                                 source=source)
        p = _number(row[2], rownum, 3, "pvalue", source)
        if not 0 < p <= 1:
            raise ParseError(f"'pvalue' must lie in (0, 1], got {row[2]!r}", row=rownum,
                             column=3, source=source)
        base = _number(row[3], rownum, 4, "basemean", source)
        if base < 0:
            raise ParseError(f"'basemean' must be >= 0, got {row[3]!r}", row=rownum, column=4,
                             source=source)
        records.append(DERecord(gene, fc, p, base))
    return DETable(tuple(records), source=str(source))


def parse_expression_matrix(data, delimiter=",", source=""):
    rows = _rows(data, delimiter, source)
    header = rows[0]
    if len(header) < 3 or header[0] != "gene" or header[1] != "group":
        raise ParseError("header must start with 'gene,group' followed by sample columns",
                         row=1, source=source)
    width = len(header)
    genes, groups, cells, where = [], [], {}, {}
    for rownum, row in enumerate(rows[1:], start=2):
        _check_width(row, width, rownum, source)
        gene = _label(row[0], rownum, 1, "gene", source)
        group = _label(row[1], rownum, 2, "group", source)
        if (gene, group) in cells:
            raise ParseError(f"duplicate cell ({gene!r}, {group!r}) (first seen in row "
                             f"{where[gene, group]})", row=rownum, source=source)
        values = [_positive(text, rownum, col, header[col - 1], source)
                  for col, text in enumerate(row[2:], start=3)]
        cells[gene, group] = SampleSet(values, label=f"{gene} {group}")
        where[gene, group] = rownum
        if gene not in genes:
            genes.append(gene)
        if group not in groups:
            groups.append(group)
    if not cells:
        raise ParseError("no data rows", row=2, source=source)
    for gene in genes:
        for group in groups:
            if (gene, group) not in cells:
                raise ParseError(f"missing cell for gene {gene!r}, group {group!r}",
                                 source=source)
    return ExpressionMatrix(tuple(genes), tuple(groups), cells)


def parse_heatmap_table(data, delimiter=",", source=""):
    rows = _rows(data, delimiter, source)
    header = rows[0]
    if len(header) < 2 or header[0] != "row":
        raise ParseError("header must start with 'row' followed by column labels",
                         row=1, source=source)
    for col, name in enumerate(header[1:], start=2):
        _label(name, 1, col, "column label", source)
    width = len(header)
    labels, cells = [], []
    for rownum, row in enumerate(rows[1:], start=2):
        _check_width(row, width, rownum, source)
        labels.append(_label(row[0], rownum, 1, "row", source))
        cells.append(tuple(_positive(text, rownum, col, header[col - 1], source)
                           for col, text in enumerate(row[1:], start=2)))
    if not cells:
        raise ParseError("no data rows", row=2, source=source)
    return HeatmapTable(tuple(labels), tuple(header[1:]), tuple(cells))


def parse_interval_table(data, delimiter=",", source=""):
    rows = _rows(data, delimiter, source)
    _expect_header(rows[0], INTERVAL_HEADER, source)
    groups = []
    for rownum, row in enumerate(rows[1:], start=2):
        _check_width(row, 5, rownum, source)
        label = _label(row[0], rownum, 1, "label", source)
        point, lower, upper = (_positive(row[c - 1], rownum, c, INTERVAL_HEADER[c - 1], source)
                               for c in (2, 3, 4))
        if not lower <= point <= upper:
            raise ParseError("need lower_fc <= point_fc <= upper_fc", row=rownum, source=source)
        groups.append(GroupSummary(label, point, lower, upper, row[4]))
    return groups


def parse_box_table(data, delimiter=",", source=""):
    rows = _rows(data, delimiter, source)
    _expect_header(rows[0], BOX_HEADER, source)
    out = []
    for rownum, row in enumerate(rows[1:], start=2):
        _check_width(row, 6, rownum, source)
        label = _label(row[0], rownum, 1, "label", source)
        vals = [_positive(row[c - 1], rownum, c, BOX_HEADER[c - 1], source) for c in range(2, 7)]
        if any(b < a for a, b in zip(vals, vals[1:])):
            raise ParseError("need min <= q1 <= median <= q3 <= max", row=rownum, source=source)
        out.append(FiveNumberSummary(*vals, label=label))
    return out


def _write(header, rows, delimiter):
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def serialize_de_table(table, delimiter=","):
    """Canonical text for a DE table, always in ``fc`` mode."""
    return _write(DE_HEADER_FC,
                  ([r.id, fmt_number(r.fc), fmt_number(r.p_value), fmt_number(r.base_mean)]
                   for r in table.records), delimiter)


def serialize_expression_matrix(matrix, delimiter=","):
    width = max(len(s) for _, _, s in matrix.cells())
    header = ["gene", "group"] + [f"s{i}" for i in range(1, width + 1)]
    rows = []
    for gene, group, samples in matrix.cells():
        if len(samples) != width:
            raise ValueError("every cell needs the same sample count to be written as CSV")
        rows.append([gene, group] + [fmt_number(v) for v in samples.values])
    return _write(header, rows, delimiter)


def serialize_heatmap_table(table, delimiter=","):
    return _write(["row", *table.column_labels],
                  ([label, *map(fmt_number, row)] for label, row in
                   zip(table.row_labels, table.cells)), delimiter)


def serialize_interval_table(groups, delimiter=","):
    return _write(INTERVAL_HEADER,
                  ([g.label, fmt_number(g.point_fc), fmt_number(g.lower_fc),
                    fmt_number(g.upper_fc), g.interval_kind] for g in groups), delimiter)


def serialize_box_table(summaries, delimiter=","):
    return _write(BOX_HEADER,
                  ([s.label, *map(fmt_number, s.as_tuple())] for s in summaries), delimiter)
