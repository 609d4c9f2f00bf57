"""
Plain-text circuit layouts.

One record per line::

    modes 8
    # layer kind modes... [eta]
    0 bs 0 1
    1 swap 3 4
    2 loss 5 0.97

Blank lines and `#` comments are ignored. Layers may appear in any order in
the file; records of one layer keep their file order.
"""

from pathlib import Path
from typing import Union

from ..errors import LayoutError
from .elements import CircuitLayout, Element, ElementKind


def parse_layout(text: str) -> CircuitLayout:
    """
    Parse the text format into a layout.

    Raises:
        LayoutError: On malformed records or a missing `modes` header
    """
    mode_count = None
    layers: dict[int, list[Element]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "modes":
            if len(fields) != 2:
                raise LayoutError(f"line {lineno}: expected 'modes <M>'")
            mode_count = int(fields[1])
            continue
        try:
            layer = int(fields[0])
            kind = ElementKind(fields[1])
        except (ValueError, IndexError) as e:
            raise LayoutError(f"line {lineno}: bad record {raw!r}") from e
        if layer < 0:
            raise LayoutError(f"line {lineno}: negative layer index")
        args = fields[2:]
        try:
            if kind is ElementKind.LOSS:
                if len(args) != 2:
                    raise LayoutError(f"line {lineno}: loss needs '<mode> <eta>'")
                element = Element.loss(int(args[0]), float(args[1]))
            else:
                if len(args) != 2:
                    raise LayoutError(f"line {lineno}: {kind.value} needs two modes")
                element = Element(kind=kind, modes=(int(args[0]), int(args[1])))
        except ValueError as e:
            if isinstance(e, LayoutError):
                raise
            raise LayoutError(f"line {lineno}: {e}") from e
        layers.setdefault(layer, []).append(element)

    if mode_count is None:
        raise LayoutError("missing 'modes <M>' header")
    depth = max(layers) + 1 if layers else 0
    try:
        return CircuitLayout.build(mode_count, [layers.get(i, []) for i in range(depth)])
    except ValueError as e:
        raise LayoutError(str(e)) from e


def format_layout(layout: CircuitLayout) -> str:
    """Render a layout in the text format (inverse of `parse_layout`)."""
    lines = [f"modes {layout.mode_count}"]
    for index, element in layout.elements():
        modes = " ".join(str(m) for m in element.modes)
        if element.kind is ElementKind.LOSS:
            lines.append(f"{index} {element.kind.value} {modes} {element.eta!r}")
        else:
            lines.append(f"{index} {element.kind.value} {modes}")
    return "\n".join(lines) + "\n"


def load_layout(path: Union[str, Path]) -> CircuitLayout:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Circuit file not found: {path}")
    return parse_layout(path.read_text(encoding="utf-8"))


def save_layout(layout: CircuitLayout, path: Union[str, Path]) -> None:
    Path(path).write_text(format_layout(layout), encoding="utf-8")
