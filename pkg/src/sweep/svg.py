"""
SVG plots of slice datasets.

Cells are coloured by the correctable flag, and a polyline follows the
frontier. Along every slice's y axis (always a dB axis) the correctable
samples form a prefix, so the frontier is one y value per grid row.
"""

from pathlib import Path
from typing import Optional, Union

from lxml import etree

from .config import Axis
from .slices import SliceDataset

SVG_NS = "http://www.w3.org/2000/svg"
WIDTH = 480
HEIGHT = 400
MARGIN = 60
CORRECTABLE_FILL = "#9fd3a8"
UNCORRECTABLE_FILL = "#f2b8b5"


def frontier(dataset: SliceDataset) -> list[tuple[float, Optional[float]]]:
    """
    Frontier of the correctable region, one point per grid row.

    The y value is the midpoint between the last correctable and the first
    uncorrectable sample; the row's last y if the whole row is correctable;
    None if no sample in the row is correctable.
    """
    ys = dataset.y_values
    points: list[tuple[float, Optional[float]]] = []
    for x, row in zip(dataset.x_values, dataset.flags()):
        count = 0
        while count < len(row) and row[count]:
            count += 1
        if count == 0:
            points.append((x, None))
        elif count == len(row):
            points.append((x, ys[-1]))
        else:
            points.append((x, (ys[count - 1] + ys[count]) / 2.0))
    return points


def _scale(value: float, low: float, high: float, start: float, end: float) -> float:
    return start + (value - low) / (high - low) * (end - start)


def _label(axis: Axis) -> str:
    return f"{axis.value} [{axis.units}]" if axis.units else axis.value


def render_slice_svg(dataset: SliceDataset, marks: Optional[dict[Axis, float]] = None) -> bytes:
    """SVG document for one slice; `marks` adds dashed lines at marginal thresholds."""
    xs, ys = dataset.x_values, dataset.y_values
    x0, x1 = xs[0], xs[-1]
    y0, y1 = ys[0], ys[-1]
    left, right = MARGIN, WIDTH - MARGIN / 2
    top, bottom = MARGIN / 2, HEIGHT - MARGIN

    def px(x: float) -> float:
        return _scale(x, x0, x1, left, right)

    def py(y: float) -> float:
        return _scale(y, y0, y1, bottom, top)

    root = etree.Element(
        f"{{{SVG_NS}}}svg",
        nsmap={None: SVG_NS},
        width=str(WIDTH),
        height=str(HEIGHT),
        viewBox=f"0 0 {WIDTH} {HEIGHT}",
    )
    title = etree.SubElement(root, f"{{{SVG_NS}}}title")
    title.text = f"{dataset.scheme} {dataset.network.value} {dataset.encoding.value}"

    cells = etree.SubElement(root, f"{{{SVG_NS}}}g", id="cells")
    cell_w = (right - left) / max(len(xs) - 1, 1)
    cell_h = (bottom - top) / max(len(ys) - 1, 1)
    for x, row in zip(xs, dataset.flags()):
        for y, flag in zip(ys, row):
            etree.SubElement(
                cells,
                f"{{{SVG_NS}}}rect",
                x=f"{px(x) - cell_w / 2:.2f}",
                y=f"{py(y) - cell_h / 2:.2f}",
                width=f"{cell_w:.2f}",
                height=f"{cell_h:.2f}",
                fill=CORRECTABLE_FILL if flag else UNCORRECTABLE_FILL,
            )

    points = [(x, y) for x, y in frontier(dataset) if y is not None]
    if points:
        etree.SubElement(
            root,
            f"{{{SVG_NS}}}polyline",
            id="frontier",
            fill="none",
            stroke="#1b4f72",
            points=" ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in points),
        )

    for axis, value in (marks or {}).items():
        if axis is dataset.x_axis and x0 <= value <= x1:
            coords = dict(x1=f"{px(value):.2f}", x2=f"{px(value):.2f}", y1=f"{top:.2f}", y2=f"{bottom:.2f}")
        elif axis is dataset.y_axis and y0 <= value <= y1:
            coords = dict(x1=f"{left:.2f}", x2=f"{right:.2f}", y1=f"{py(value):.2f}", y2=f"{py(value):.2f}")
        else:
            continue
        etree.SubElement(
            root, f"{{{SVG_NS}}}line", stroke="#555", attrib={"stroke-dasharray": "4 3", "class": "marginal"}, **coords
        )

    axes = etree.SubElement(root, f"{{{SVG_NS}}}g", id="axes", stroke="#000")
    etree.SubElement(axes, f"{{{SVG_NS}}}line", x1=str(left), y1=str(bottom), x2=str(right), y2=str(bottom))
    etree.SubElement(axes, f"{{{SVG_NS}}}line", x1=str(left), y1=str(bottom), x2=str(left), y2=str(top))
    for text, x, y in (
        (_label(dataset.x_axis), (left + right) / 2, HEIGHT - MARGIN / 3),
        (_label(dataset.y_axis), MARGIN / 4, (top + bottom) / 2),
        (f"{x0:g}", left, bottom + 16),
        (f"{x1:g}", right, bottom + 16),
        (f"{y0:g}", left - 30, bottom),
        (f"{y1:g}", left - 30, top + 4),
    ):
        label = etree.SubElement(root, f"{{{SVG_NS}}}text", x=f"{x:.2f}", y=f"{y:.2f}", attrib={"font-size": "11"})
        label.text = text
    return etree.tostring(root, xml_declaration=True, encoding="utf-8", pretty_print=True)  # type: ignore[no-any-return]


def write_slice_svg(
    dataset: SliceDataset, output: Union[str, Path], marks: Optional[dict[Axis, float]] = None
) -> None:
    with open(output, "wb") as f:
        f.write(render_slice_svg(dataset, marks))
