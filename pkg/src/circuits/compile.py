"""
Compile layered layouts into transfer matrices.

Reduced space keeps the M circuit modes and represents a loss channel as a
row scaling by sqrt(eta). Extended space gives every loss channel its own
initially empty mode, appended in layer order, and stays unitary.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ..errors import LayoutError
from ..fock import MatrixKind, TransferMatrix
from .elements import CircuitLayout, Element, ElementKind

logger = logging.getLogger(__name__)

HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)
SWAP = np.array([[0.0, 1.0], [1.0, 0.0]])


class Space(str, Enum):
    EXTENDED = "extended"
    REDUCED = "reduced"


@dataclass(frozen=True)
class CompiledCircuit:
    """A compiled layout plus bookkeeping for its loss modes."""

    original_mode_count: int
    loss_mode_count: int
    matrix: TransferMatrix
    space: Space

    @property
    def width(self) -> int:
        return self.matrix.dimension


def element_matrix(
    element: Element,
    width: int,
    space: Space = Space.REDUCED,
    loss_mode: Optional[int] = None,
) -> TransferMatrix:
    """
    Embed one element into a width x width matrix.

    Args:
        element: The element to embed
        width: Matrix size (M, or M + M_loss in extended space)
        space: Reduced or extended representation of loss channels
        loss_mode: Dedicated loss mode index, required for loss channels in
            extended space

    Raises:
        LayoutError: If a mode lies outside the width
    """
    modes = list(element.modes)
    if loss_mode is not None:
        modes.append(loss_mode)
    if any(m < 0 or m >= width for m in modes):
        raise LayoutError(f"Element {element.kind.value} on modes {modes} does not fit width {width}")

    u = np.eye(width, dtype=complex)
    if element.kind is ElementKind.BEAMSPLITTER:
        i, j = element.modes
        u[np.ix_([i, j], [i, j])] = HADAMARD
        return TransferMatrix(u, MatrixKind.UNITARY)
    if element.kind is ElementKind.SWAP:
        i, j = element.modes
        u[np.ix_([i, j], [i, j])] = SWAP
        return TransferMatrix(u, MatrixKind.UNITARY)

    (target,) = element.modes
    assert element.eta is not None
    t = np.sqrt(element.eta)
    if space is Space.REDUCED:
        u[target, target] = t
        return TransferMatrix(u, MatrixKind.UNITARY if element.eta == 1.0 else MatrixKind.SUBUNITARY)
    if loss_mode is None:
        raise LayoutError("Extended-space loss channel needs a loss mode")
    r = np.sqrt(1.0 - element.eta)
    u[np.ix_([target, loss_mode], [target, loss_mode])] = [[t, -r], [r, t]]
    return TransferMatrix(u, MatrixKind.UNITARY)


def compile_layout(layout: CircuitLayout, space: Space = Space.REDUCED) -> CompiledCircuit:
    """Multiply layer matrices in order; the first layer acts first."""
    m = layout.mode_count
    loss_count = layout.loss_channels() if space is Space.EXTENDED else 0
    width = m + loss_count
    total = np.eye(width, dtype=complex)
    next_loss = m
    for layer in layout.layers:
        layer_matrix = np.eye(width, dtype=complex)
        for element in layer:
            loss_mode = None
            if element.kind is ElementKind.LOSS and space is Space.EXTENDED:
                loss_mode = next_loss
                next_loss += 1
            # elements in one layer act on disjoint modes, so their products commute
            layer_matrix = element_matrix(element, width, space, loss_mode).entries @ layer_matrix
        total = layer_matrix @ total
    kind = MatrixKind.UNITARY
    if space is Space.REDUCED and any(
        el.kind is ElementKind.LOSS and el.eta != 1.0 for _, el in layout.elements()
    ):
        kind = MatrixKind.SUBUNITARY
    logger.debug("Compiled %d-mode layout (%s space, %d loss modes)", m, space.value, loss_count)
    return CompiledCircuit(m, loss_count, TransferMatrix(total, kind), space)
