"""
Sparse element-by-element Fock propagation.

Each beamsplitter only redistributes the photons of its two modes, so a
state can be pushed through a layout without building the full transfer
matrix or enumerating every output pattern. Loss channels keep only the
branch in which no photon is lost (amplitude scaled by eta^(n/2)), which is
exactly the action of the reduced-space subunitary matrix.
"""

import math
from functools import lru_cache

from scipy.special import comb

from ..fock import FockAmplitudeVector, FockPattern
from .elements import CircuitLayout, Element, ElementKind

_DROP = 1e-15


@lru_cache(maxsize=None)
def beamsplitter_branches(first: int, second: int) -> tuple[tuple[int, float], ...]:
    """
    Output distribution of |first, second> through the 50:50 beamsplitter.

    Returns (k, c) pairs meaning amplitude c on |k, first + second - k>.
    """
    n = first + second
    branches = []
    for k in range(n + 1):
        coefficient = 0.0
        for i in range(max(0, k - second), min(first, k) + 1):
            j = k - i
            sign = -1.0 if (second - j) % 2 else 1.0
            coefficient += comb(first, i, exact=True) * comb(second, j, exact=True) * sign
        if coefficient == 0:
            continue
        scale = math.sqrt(
            math.factorial(k) * math.factorial(n - k) / (math.factorial(first) * math.factorial(second))
        )
        branches.append((k, coefficient * scale / 2 ** (n / 2)))
    return tuple(branches)


def apply_element(
    entries: dict[tuple[int, ...], complex], element: Element
) -> dict[tuple[int, ...], complex]:
    out: dict[tuple[int, ...], complex] = {}
    if element.kind is ElementKind.LOSS:
        (mode,) = element.modes
        assert element.eta is not None
        for occ, amp in entries.items():
            scaled = amp * element.eta ** (occ[mode] / 2)
            if abs(scaled) > _DROP:
                out[occ] = scaled
        return out

    i, j = element.modes
    for occ, amp in entries.items():
        if element.kind is ElementKind.SWAP:
            moved = list(occ)
            moved[i], moved[j] = occ[j], occ[i]
            key = tuple(moved)
            out[key] = out.get(key, 0j) + amp
            continue
        for k, c in beamsplitter_branches(occ[i], occ[j]):
            moved = list(occ)
            moved[i], moved[j] = k, occ[i] + occ[j] - k
            key = tuple(moved)
            out[key] = out.get(key, 0j) + amp * c
    return {k: v for k, v in out.items() if abs(v) > _DROP}


def propagate(layout: CircuitLayout, state: FockAmplitudeVector) -> FockAmplitudeVector:
    """Push a state through every element of a layout, layer by layer."""
    entries = {p.occupations: a for p, a in state.entries.items()}
    for layer in layout.layers:
        for element in layer:
            entries = apply_element(entries, element)
    return FockAmplitudeVector(layout.mode_count, {FockPattern(k): v for k, v in entries.items()})


@lru_cache(maxsize=None)
def loss_branches(photons: int, eta: float) -> tuple[tuple[int, float], ...]:
    """|n, 0> on (mode, fresh loss mode) -> sum_k sqrt(C(n,k)) t^k r^(n-k) |k, n-k>."""
    t, r = math.sqrt(eta), math.sqrt(1.0 - eta)
    return tuple(
        (k, math.sqrt(comb(photons, k, exact=True)) * t**k * r ** (photons - k))
        for k in range(photons + 1)
        if (t > 0 or k == 0) and (r > 0 or k == photons)
    )


def propagate_extended(layout: CircuitLayout, state: FockAmplitudeVector) -> FockAmplitudeVector:
    """
    Unitary propagation with one explicit loss mode per loss channel.

    Loss modes are appended after the circuit modes in layer order, matching
    `compile_layout(..., Space.EXTENDED)`.
    """
    m = layout.mode_count
    width = m + layout.loss_channels()
    pad = (0,) * (width - m)
    entries = {p.occupations + pad: a for p, a in state.entries.items()}
    next_loss = m
    for layer in layout.layers:
        for element in layer:
            if element.kind is not ElementKind.LOSS:
                entries = apply_element(entries, element)
                continue
            (mode,) = element.modes
            assert element.eta is not None
            out: dict[tuple[int, ...], complex] = {}
            for occ, amp in entries.items():
                for kept, c in loss_branches(occ[mode], element.eta):
                    moved = list(occ)
                    moved[mode], moved[next_loss] = kept, occ[mode] - kept
                    key = tuple(moved)
                    out[key] = out.get(key, 0j) + amp * c
            entries = {k: v for k, v in out.items() if abs(v) > _DROP}
            next_loss += 1
    return FockAmplitudeVector(width, {FockPattern(k): v for k, v in entries.items()})
