"""
Dual-rail Bell states, logical product states and ancilla states.

Qubit modes are ordered (h1, v1, h2, v2); logical |0> puts the photon in h,
logical |1> in v.
"""

import math
from dataclasses import dataclass
from enum import Enum

from ..errors import ContractViolation
from ..fock import FockAmplitudeVector, FockPattern

_S = 1 / math.sqrt(2)


class BellLabel(str, Enum):
    """The four Bell states with their XX and ZZ eigenvalues."""

    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"

    @property
    def xx(self) -> int:
        return 1 if self in (BellLabel.PHI_PLUS, BellLabel.PSI_PLUS) else -1

    @property
    def zz(self) -> int:
        return 1 if self in (BellLabel.PHI_PLUS, BellLabel.PHI_MINUS) else -1

    def eigenvalue(self, operator: str) -> int:
        return self.xx if operator == "XX" else self.zz


_BELL_TERMS = {
    BellLabel.PHI_PLUS: [((1, 0, 1, 0), _S), ((0, 1, 0, 1), _S)],
    BellLabel.PHI_MINUS: [((1, 0, 1, 0), _S), ((0, 1, 0, 1), -_S)],
    BellLabel.PSI_PLUS: [((1, 0, 0, 1), _S), ((0, 1, 1, 0), _S)],
    BellLabel.PSI_MINUS: [((1, 0, 0, 1), _S), ((0, 1, 1, 0), -_S)],
}


@dataclass(frozen=True)
class BellState:
    label: BellLabel
    representation: FockAmplitudeVector


def bell_state(label: BellLabel) -> BellState:
    return BellState(label, FockAmplitudeVector.from_terms(_BELL_TERMS[label]))


_QUBIT = {
    "0": [((1, 0), 1.0)],
    "1": [((0, 1), 1.0)],
    "+": [((1, 0), _S), ((0, 1), _S)],
    "-": [((1, 0), _S), ((0, 1), -_S)],
}


def qubit_state(label: str) -> FockAmplitudeVector:
    """Single dual-rail qubit: one of '0', '1', '+', '-'."""
    if label not in _QUBIT:
        raise ContractViolation(f"Unknown qubit state {label!r}")
    return FockAmplitudeVector.from_terms(_QUBIT[label])


def product_state(first: str, second: str) -> FockAmplitudeVector:
    """Two unentangled dual-rail qubits over (h1, v1, h2, v2)."""
    return qubit_state(first).tensor(qubit_state(second))


COMPUTATIONAL_PRODUCTS = ("00", "01", "10", "11")
DEFAULT_LOGICAL_INPUT = "++"


class AncillaLabel(str, Enum):
    """Catalog ancilla states."""

    NONE = "none"
    SINGLE_PAIR = "11"
    DOUBLE_PAIR = "2x11"
    PHI_PLUS = "phi+"
    A2 = "a2"
    PHI_PLUS_B2 = "phi+b2"

    @property
    def display(self) -> str:
        return _DISPLAY[self]


_DISPLAY = {
    AncillaLabel.NONE: "none",
    AncillaLabel.SINGLE_PAIR: "|11>",
    AncillaLabel.DOUBLE_PAIR: "2x|11>",
    AncillaLabel.PHI_PLUS: "|Phi+>",
    AncillaLabel.A2: "|A2>",
    AncillaLabel.PHI_PLUS_B2: "|Phi+>|B2>",
}


@dataclass(frozen=True)
class AncillaState:
    """Ancillary photons fed into a boosted scheme."""

    label: AncillaLabel
    representation: FockAmplitudeVector

    @property
    def photon_count(self) -> int:
        return self.representation.total_photons()

    @property
    def mode_count(self) -> int:
        return self.representation.mode_count


def _ghz_pair(photons_per_branch: int, repeats: int) -> FockAmplitudeVector:
    """(|n0n0...> + |0n0n...>)/sqrt2 over 2*repeats modes."""
    n = photons_per_branch
    first = (n, 0) * repeats
    second = (0, n) * repeats
    return FockAmplitudeVector.from_terms([(first, _S), (second, _S)])


def ancilla_state(label: AncillaLabel) -> AncillaState:
    if label is AncillaLabel.NONE:
        rep = FockAmplitudeVector(0, {FockPattern(()): 1.0 + 0j})
    elif label is AncillaLabel.SINGLE_PAIR:
        rep = FockAmplitudeVector.basis((1, 1))
    elif label is AncillaLabel.DOUBLE_PAIR:
        rep = FockAmplitudeVector.basis((1, 1, 1, 1))
    elif label is AncillaLabel.PHI_PLUS:
        rep = _ghz_pair(1, 2)
    elif label is AncillaLabel.A2:
        rep = _ghz_pair(2, 2)
    elif label is AncillaLabel.PHI_PLUS_B2:
        rep = _ghz_pair(1, 2).tensor(_ghz_pair(1, 4))
    else:
        raise ContractViolation(f"Unsupported ancilla {label}")
    return AncillaState(label, rep)
