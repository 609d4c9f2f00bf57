"""
BSM scheme catalog.

Every scheme is a layout plus the positions of the two qubits and of the
ancilla inside it. The boosted schemes share one planar skeleton with
nearest-neighbour beamsplitters and swaps only; the |Phi+>|B2> scheme uses a
full 8-port Hadamard (Sylvester) network and is not planar.
"""

import dataclasses
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from ..circuits import CircuitLayout, Element, ElementKind
from ..errors import ContractViolation
from ..fock import FockAmplitudeVector
from .states import AncillaLabel, AncillaState, ancilla_state

logger = logging.getLogger(__name__)


class FailureBasis(str, Enum):
    """Two-qubit operator still measured when a fusion fails."""

    XX = "XX"
    ZZ = "ZZ"

    @property
    def other(self) -> "FailureBasis":
        return FailureBasis.ZZ if self is FailureBasis.XX else FailureBasis.XX


@dataclass(frozen=True, eq=False)
class BsmScheme:
    """
    A catalog entry.

    Attributes:
        name: Catalog key, e.g. "regular-xx" or "boosted-phi+"
        layout: Lossless layout
        ancilla: Ancilla state fed alongside the qubits
        qubit_modes: Positions of (h1, v1, h2, v2)
        ancilla_modes: Positions of the ancilla modes, in ancilla order
        failure_basis: Operator measured on failure
        expected_p_succ: Catalog value of the lossless success probability
    """

    name: str
    layout: CircuitLayout
    ancilla: AncillaState
    qubit_modes: tuple[int, ...]
    ancilla_modes: tuple[int, ...]
    failure_basis: FailureBasis
    expected_p_succ: float
    planar: bool = True

    def __post_init__(self) -> None:
        if len(self.qubit_modes) != 4:
            raise ContractViolation(f"{self.name}: need 4 qubit modes, got {self.qubit_modes}")
        if len(self.ancilla_modes) != self.ancilla.mode_count:
            raise ContractViolation(
                f"{self.name}: ancilla has {self.ancilla.mode_count} modes, "
                f"{len(self.ancilla_modes)} positions given"
            )
        used = set(self.qubit_modes) | set(self.ancilla_modes)
        if len(used) != 4 + len(self.ancilla_modes) or max(used) >= self.layout.mode_count:
            raise ContractViolation(f"{self.name}: qubit/ancilla positions overlap or overflow")

    @property
    def mode_count(self) -> int:
        return self.layout.mode_count

    @property
    def photon_count(self) -> int:
        return 2 + self.ancilla.photon_count

    @property
    def input_modes(self) -> tuple[int, ...]:
        return self.qubit_modes + self.ancilla_modes

    def input_state(self, qubits: FockAmplitudeVector) -> FockAmplitudeVector:
        """Embed a 4-mode two-qubit state together with the ancilla."""
        if qubits.mode_count != 4:
            raise ContractViolation(f"Two-qubit state must span 4 modes, got {qubits.mode_count}")
        combined = qubits.tensor(self.ancilla.representation)
        return combined.embed(self.mode_count, list(self.input_modes))

    def with_layout(self, layout: CircuitLayout) -> "BsmScheme":
        """Same scheme on a replacement layout of the same width."""
        if layout.mode_count != self.mode_count:
            raise ContractViolation(
                f"{self.name}: replacement layout has {layout.mode_count} modes, need {self.mode_count}"
            )
        return dataclasses.replace(self, layout=layout)

    def element_counts(self) -> dict[str, int]:
        counts = self.layout.summary()
        counts.pop("loss_channels")
        return counts


def _bs(*pairs: tuple[int, int]) -> list[Element]:
    return [Element.beamsplitter(a, b) for a, b in pairs]


def _swap(*pairs: tuple[int, int]) -> list[Element]:
    return [Element.swap(a, b) for a, b in pairs]


def with_failure_basis(scheme: BsmScheme, basis: FailureBasis) -> BsmScheme:
    """
    Toggle the failure basis by removing the leading qubit beamsplitters.

    Only XX -> ZZ is supported; layers left empty are dropped.
    """
    if basis is scheme.failure_basis:
        return scheme
    if basis is not FailureBasis.ZZ:
        raise ContractViolation("Only XX-failure layouts can be turned into ZZ-failure layouts")
    h1, v1, h2, v2 = scheme.qubit_modes
    leading = {(h1, v1), (h2, v2)}
    first, *rest = scheme.layout.layers
    stripped = [
        el for el in first if not (el.kind is ElementKind.BEAMSPLITTER and tuple(el.modes) in leading)
    ]
    if len(stripped) != len(first) - 2:
        raise ContractViolation(f"{scheme.name}: no leading qubit beamsplitters to remove")
    layers = ([list(stripped)] if stripped else []) + [list(layer) for layer in rest]
    layout = CircuitLayout.build(scheme.mode_count, layers)
    name = scheme.name[:-3] + "-zz" if scheme.name.endswith("-xx") else scheme.name + "-zz"
    return dataclasses.replace(scheme, name=name, layout=layout, failure_basis=FailureBasis.ZZ)


def build_regular_bsm(basis: FailureBasis = FailureBasis.XX) -> BsmScheme:
    """Unboosted 4-mode BSM failing on the given basis."""
    layout = CircuitLayout.build(
        4,
        [
            _bs((0, 1), (2, 3)),
            _swap((1, 2)),
            _bs((0, 1), (2, 3)),
        ],
    )
    scheme = BsmScheme(
        name="regular-xx",
        layout=layout,
        ancilla=ancilla_state(AncillaLabel.NONE),
        qubit_modes=(0, 1, 2, 3),
        ancilla_modes=(),
        failure_basis=FailureBasis.XX,
        expected_p_succ=0.5,
    )
    return with_failure_basis(scheme, basis)


_PLANAR_EDGE = _bs((0, 1), (2, 3), (4, 5), (6, 7))
_PLANAR_QUBITS = (2, 3, 4, 5)

# Ancilla positions (h3, v3, h4, v4) inside the planar skeleton.
_ENTANGLED_ANCILLA_MODES = (0, 6, 1, 7)
_UNENTANGLED_ANCILLA_MODES = (0, 1, 6, 7)

_BOOSTED = {
    AncillaLabel.SINGLE_PAIR: (0.625, False),
    AncillaLabel.DOUBLE_PAIR: (0.75, False),
    AncillaLabel.PHI_PLUS: (0.75, True),
    AncillaLabel.A2: (0.625, False),
}


def planar_skeleton(entangled_ancilla: bool) -> CircuitLayout:
    """Five-layer, eight-mode boosting network."""
    exchange = _swap((1, 2), (5, 6)) if entangled_ancilla else _swap((1, 2), (3, 4), (5, 6))
    return CircuitLayout.build(
        8,
        [
            list(_PLANAR_EDGE),
            _swap((3, 4)),
            _bs((2, 3), (4, 5)),
            exchange,
            list(_PLANAR_EDGE),
        ],
    )


def build_boosted_bsm(ancilla: AncillaLabel, basis: FailureBasis = FailureBasis.XX) -> BsmScheme:
    """Boosted BSM fed with one of the catalog ancillas."""
    if ancilla is AncillaLabel.PHI_PLUS_B2:
        scheme = _build_sylvester_bsm()
    elif ancilla in _BOOSTED:
        expected, entangled = _BOOSTED[ancilla]
        state = ancilla_state(ancilla)
        positions = _ENTANGLED_ANCILLA_MODES if entangled else _UNENTANGLED_ANCILLA_MODES
        scheme = BsmScheme(
            name=f"boosted-{ancilla.value}-xx",
            layout=planar_skeleton(entangled),
            ancilla=state,
            qubit_modes=_PLANAR_QUBITS,
            ancilla_modes=positions[: state.mode_count],
            failure_basis=FailureBasis.XX,
            expected_p_succ=expected,
        )
    else:
        raise ContractViolation(f"No boosted scheme uses ancilla {ancilla.value!r}")
    return with_failure_basis(scheme, basis)


def _sylvester_layers(ports: int, first_layer: list[Element]) -> list[list[Element]]:
    """Hadamard network over dual-rail ports; port p owns modes (2p, 2p + 1)."""
    layers: list[list[Element]] = []
    bit = 1
    while bit < ports:
        stage = []
        for p in range(ports):
            if not p & bit:
                q = p | bit
                stage += _bs((2 * p, 2 * q), (2 * p + 1, 2 * q + 1))
        layers.append(stage)
        bit <<= 1
    # The qubit-port part of the first stage cannot share a layer with the
    # leading qubit beamsplitters, so split it off.
    qubit_stage = [el for el in layers[0] if max(el.modes) < 4]
    ancilla_stage = [el for el in layers[0] if min(el.modes) >= 4]
    return [first_layer + ancilla_stage, qubit_stage] + layers[1:]


def _build_sylvester_bsm() -> BsmScheme:
    layers = _sylvester_layers(8, _bs((0, 1), (2, 3)))
    return BsmScheme(
        name="boosted-phi+b2-xx",
        layout=CircuitLayout.build(16, layers),
        ancilla=ancilla_state(AncillaLabel.PHI_PLUS_B2),
        qubit_modes=(0, 1, 2, 3),
        ancilla_modes=tuple(range(4, 16)),
        failure_basis=FailureBasis.XX,
        expected_p_succ=0.875,
        planar=False,
    )


@lru_cache(maxsize=None)
def catalog() -> dict[str, BsmScheme]:
    """All catalog schemes keyed by name, both failure bases."""
    schemes = [build_regular_bsm(b) for b in FailureBasis]
    for label in AncillaLabel:
        if label is AncillaLabel.NONE:
            continue
        schemes += [build_boosted_bsm(label, b) for b in FailureBasis]
    logger.debug("Built %d catalog schemes", len(schemes))
    return {s.name: s for s in schemes}


CATALOG_NAMES = tuple(catalog())

DEFAULT_SWEEP_SCHEMES = tuple(name for name in CATALOG_NAMES if "b2" not in name)


def get_scheme(name: str, layout: Optional[CircuitLayout] = None) -> BsmScheme:
    """Look up a catalog scheme, optionally swapping in a user layout."""
    schemes = catalog()
    if name not in schemes:
        raise ContractViolation(f"Unknown scheme {name!r}; choose from {', '.join(schemes)}")
    if layout is None:
        return schemes[name]
    return _override(name, layout)


@lru_cache(maxsize=64)
def _override(name: str, layout: CircuitLayout) -> BsmScheme:
    # One object per (name, layout) so identity-keyed caches downstream hit.
    return catalog()[name].with_layout(layout)
