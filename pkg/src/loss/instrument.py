"""
Insertion of loss channels into a lossless scheme layout.

Instrumented layout, in temporal order:

1. one channel of transmissivity p_eff on every input photon mode
   (generation and detection losses commuted to the front);
2. for each base layer: the layer's elements, then a channel of eta_bs on
   both output modes of every beamsplitter in it, then a channel of
   eta_layer on every mode.

Swaps get no element loss. Channels with eta = 1 are kept so that the
layout structure does not depend on the parameter point.
"""

import dataclasses
from dataclasses import dataclass
from typing import Optional

from ..bsm import BsmScheme
from ..circuits import CircuitLayout, Element, ElementKind
from .params import LossParams


@dataclass(frozen=True, eq=False)
class LossySchemeInstance:
    base: BsmScheme
    params: LossParams
    instrumented_layout: CircuitLayout
    p_loss: Optional[float] = None

    def with_p_loss(self, value: float) -> "LossySchemeInstance":
        return dataclasses.replace(self, p_loss=value)


def instrument_layout(
    layout: CircuitLayout, input_modes: tuple[int, ...], params: LossParams
) -> CircuitLayout:
    """Lossy version of `layout` under `params`."""
    layers: list[list[Element]] = [[Element.loss(m, params.p_eff) for m in sorted(input_modes)]]
    eta_bs, eta_layer = params.eta_bs, params.eta_layer
    every_mode = range(layout.mode_count)
    for layer in layout.layers:
        layers.append(list(layer))
        outputs = sorted(
            mode for el in layer if el.kind is ElementKind.BEAMSPLITTER for mode in el.modes
        )
        if outputs:
            layers.append([Element.loss(m, eta_bs) for m in outputs])
        layers.append([Element.loss(m, eta_layer) for m in every_mode])
    return CircuitLayout.build(layout.mode_count, layers)


def instrument(base: BsmScheme, params: LossParams) -> LossySchemeInstance:
    return LossySchemeInstance(
        base=base,
        params=params,
        instrumented_layout=instrument_layout(base.layout, base.input_modes, params),
    )
