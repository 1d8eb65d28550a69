"""Exception types raised across madfc."""


class MadfcError(Exception):
    """Base class for all madfc errors."""


class DomainError(MadfcError, ValueError):
    """A value lies outside the domain of a transform (e.g. fold change <= 0)."""


class UndefinedRegionError(DomainError):
    """Input falls in the gap [-1, 1) where the contraction transform is undefined."""


class DegenerateInputError(MadfcError, ValueError):
    """Too few samples, zero variance or a zero denominator."""


class ParseError(MadfcError, ValueError):
    """Malformed tabular input or label text.

    ``row`` and ``column`` are 1-based; the header is row 1.
    """

    def __init__(self, message, row=None, column=None, source=None):
        self.row = row
        self.column = column
        self.source = source
        where = []
        if source:
            where.append(str(source))
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class RenderError(MadfcError, ValueError):
    """A chart cannot be drawn from the supplied data/spec."""
