"""Helpers for inspecting rendered SVG in tests."""
import xml.etree.ElementTree as ET

NS = {"svg": "http://www.w3.org/2000/svg"}


def parse(doc):
    return ET.fromstring(doc.bytes)


def find(root, tag, cls):
    return [el for el in root.iter(f"{{{NS['svg']}}}{tag}") if el.get("class") == cls]


def group_children(root, group_cls, tag, cls):
    """For each <g class=group_cls>, the children matching tag/class."""
    out = []
    for g in find(root, "g", group_cls):
        out.append([el for el in g if el.tag == f"{{{NS['svg']}}}{tag}" and el.get("class") == cls])
    return out


def polygon_points(el):
    return [tuple(map(float, p.split(","))) for p in el.get("points").split()]


def violin_widths(el):
    """Half-widths along the outline; right side ascends, left side descends."""
    pts = polygon_points(el)
    n = len(pts) // 2
    right, left = pts[:n], pts[n:][::-1]
    return [(r[0] - l[0]) / 2 for r, l in zip(right, left)], [r[1] for r in right]


def bar_lengths(root):
    return [abs(float(el.get("y2")) - float(el.get("y1"))) for el in find(root, "line", "interval")]
