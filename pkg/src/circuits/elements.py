"""
Circuit elements and layered layouts.
"""

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import LayoutError


class ElementKind(str, Enum):
    """Supported linear-optical elements."""
    BEAMSPLITTER = "bs"
    SWAP = "swap"
    LOSS = "loss"


class Element(BaseModel):
    """A placed element: two modes for bs/swap, one mode plus eta for loss."""

    model_config = ConfigDict(frozen=True)

    kind: ElementKind = Field(..., description="Element type")
    modes: tuple[int, ...] = Field(..., description="Target mode indices")
    eta: Optional[float] = Field(None, ge=0.0, le=1.0, description="Loss channel transmissivity")

    @model_validator(mode="after")
    def _check_shape(self) -> "Element":
        if any(m < 0 for m in self.modes):
            raise ValueError(f"Negative mode index in {self.modes}")
        if self.kind is ElementKind.LOSS:
            if len(self.modes) != 1 or self.eta is None:
                raise ValueError("A loss channel needs exactly one mode and an eta")
        else:
            if len(self.modes) != 2 or self.modes[0] == self.modes[1]:
                raise ValueError(f"{self.kind.value} needs two distinct modes, got {self.modes}")
            if self.eta is not None:
                raise ValueError(f"{self.kind.value} takes no eta")
        return self

    @classmethod
    def beamsplitter(cls, first: int, second: int) -> "Element":
        return cls(kind=ElementKind.BEAMSPLITTER, modes=(first, second))

    @classmethod
    def swap(cls, first: int, second: int) -> "Element":
        return cls(kind=ElementKind.SWAP, modes=(first, second))

    @classmethod
    def loss(cls, mode: int, eta: float) -> "Element":
        return cls(kind=ElementKind.LOSS, modes=(mode,), eta=eta)


Layer = tuple[Element, ...]


class CircuitLayout(BaseModel):
    """Elements grouped in layers; layer order is temporal order."""

    model_config = ConfigDict(frozen=True)

    mode_count: int = Field(..., ge=1, description="Circuit width M")
    layers: tuple[Layer, ...] = Field(default=(), description="Ordered layers of elements")

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)
        # Raised as LayoutError, never wrapped in a pydantic ValidationError.
        self._check_layers()

    def _check_layers(self) -> None:
        for index, layer in enumerate(self.layers):
            touched: set[int] = set()
            for element in layer:
                for mode in element.modes:
                    if mode >= self.mode_count:
                        raise LayoutError(
                            f"Layer {index}: mode {mode} outside circuit width {self.mode_count}"
                        )
                    if mode in touched:
                        raise LayoutError(f"Layer {index}: mode {mode} used by two elements")
                    touched.add(mode)

    @classmethod
    def build(cls, mode_count: int, layers: list[list[Element]]) -> "CircuitLayout":
        return cls(mode_count=mode_count, layers=tuple(tuple(layer) for layer in layers))

    def elements(self) -> list[tuple[int, Element]]:
        return [(i, el) for i, layer in enumerate(self.layers) for el in layer]

    def count(self, kind: ElementKind) -> int:
        return sum(1 for _, el in self.elements() if el.kind is kind)

    @property
    def depth(self) -> int:
        return len(self.layers)

    def loss_channels(self) -> int:
        return self.count(ElementKind.LOSS)

    def without_losses(self) -> "CircuitLayout":
        """The same layout with every loss channel removed (layers kept)."""
        return CircuitLayout(
            mode_count=self.mode_count,
            layers=tuple(tuple(el for el in layer if el.kind is not ElementKind.LOSS) for layer in self.layers),
        )

    def summary(self) -> dict[str, int]:
        return {
            "modes": self.mode_count,
            "layers": self.depth,
            "beamsplitters": self.count(ElementKind.BEAMSPLITTER),
            "swaps": self.count(ElementKind.SWAP),
            "loss_channels": self.loss_channels(),
        }
