"""Minimal deterministic SVG writer.

Numbers are written with exactly three decimals; attributes keep the order
they were given in.
"""
from dataclasses import dataclass
from numbers import Real
from pathlib import Path
from xml.sax.saxutils import escape, quoteattr

SVG_NS = "http://www.w3.org/2000/svg"


def fmt(v):
    s = f"{float(v):.3f}"
    return "0.000" if s == "-0.000" else s


def _attr_text(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Real):
        return fmt(value)
    return str(value)


@dataclass(frozen=True)
class SvgDocument:
    """Rendered SVG 1.1 text."""

    text: str

    @property
    def bytes(self):
        return self.text.encode("utf-8")

    def write(self, path):
        Path(path).write_bytes(self.bytes)

    def __str__(self):
        return self.text


class SvgBuilder:
    def __init__(self, width, height, title=""):
        self.width = width
        self.height = height
        self._lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="{SVG_NS}" version="1.1" width="{fmt(width)}" height="{fmt(height)}" '
            f'viewBox="{fmt(0)} {fmt(0)} {fmt(width)} {fmt(height)}">',
        ]
        if title:
            self._lines.append(f"<title>{escape(title)}</title>")
        self._depth = 1

    def _emit(self, line):
        self._lines.append("  " * self._depth + line)

    @staticmethod
    def _attrs(attrs):
        return "".join(f" {name}={quoteattr(_attr_text(value))}"
                       for name, value in attrs.items() if value is not None)

    def open(self, tag, **attrs):
        self._emit(f"<{tag}{self._attrs(_rename(attrs))}>")
        self._depth += 1

    def close(self, tag):
        self._depth -= 1
        self._emit(f"</{tag}>")

    def element(self, tag, text=None, markup=None, **attrs):
        """Write one element; ``markup`` is inserted unescaped."""
        head = f"<{tag}{self._attrs(_rename(attrs))}"
        if text is None and markup is None:
            self._emit(head + "/>")
        else:
            body = escape(text) if markup is None else markup
            self._emit(f"{head}>{body}</{tag}>")

    def finish(self):
        self._lines.append("</svg>")
        return SvgDocument("\n".join(self._lines) + "\n")


def _rename(attrs):
    # python-friendly keyword names -> SVG attribute names
    out = {}
    for key, value in attrs.items():
        if key == "cls":
            key = "class"
        out[key.rstrip("_").replace("_", "-")] = value
    return out
