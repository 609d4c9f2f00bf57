"""
Probability that every photon survives a lossy layout.

Three independent routes are provided:

* `survival_probability`: evolve with the reduced-space subunitary matrix
  and sum |amplitude|^2 over all N-photon outputs.
* `survival_probability_extended`: evolve unitarily in the extended space
  and keep the outcomes with all N photons still in the circuit modes.
* `survival_probability_gram`: <psi| Gamma(L^dagger L) |psi> written as
  permanents of the Gram matrix, with no output enumeration at all.
"""

import math

import numpy as np
from scipy.special import comb

from ..errors import ContractViolation
from ..fock import (
    FockAmplitudeVector,
    FockPattern,
    TransferMatrix,
    build_submatrix,
    evolve_state,
    permanent,
)
from .compile import Space, compile_layout
from .elements import CircuitLayout, Element
from .propagate import propagate, propagate_extended


def _check_input(layout: CircuitLayout, state: FockAmplitudeVector) -> int:
    if state.mode_count != layout.mode_count:
        raise ContractViolation(
            f"State has {state.mode_count} modes, layout has {layout.mode_count}"
        )
    return state.total_photons()


def survival_probability(layout: CircuitLayout, state: FockAmplitudeVector) -> float:
    """Sum of |amplitude|^2 over N-photon outputs of the reduced-space matrix."""
    _check_input(layout, state)
    compiled = compile_layout(layout, Space.REDUCED)
    return evolve_state(compiled.matrix, state).norm_squared()


def survival_probability_extended(
    layout: CircuitLayout, state: FockAmplitudeVector, method: str = "propagate"
) -> float:
    """
    Extended-space evolution followed by a trace over the loss modes.

    Args:
        layout: Layout containing loss channels
        state: Fixed-photon-number input over the circuit modes
        method: "propagate" for sparse unitary propagation with explicit loss
            modes, "matrix" for permanents of the compiled extended matrix
    """
    photons = _check_input(layout, state)
    m = layout.mode_count
    if method == "matrix":
        compiled = compile_layout(layout, Space.EXTENDED)
        padded = state.embed(compiled.width, list(range(m)))
        evolved = evolve_state(compiled.matrix, padded)
    elif method == "propagate":
        evolved = propagate_extended(layout, state)
    else:
        raise ContractViolation(f"Unknown extended-space method: {method}")
    return float(
        sum(abs(a) ** 2 for p, a in evolved.entries.items() if sum(p.occupations[:m]) == photons)
    )


def survival_probability_gram(transfer: TransferMatrix, state: FockAmplitudeVector) -> float:
    """Survival probability from permanents of L^dagger L between input terms."""
    state.total_photons()
    gram = TransferMatrix(transfer.entries.conj().T @ transfer.entries)
    terms = list(state.entries.items())
    total = 0j
    for p_k, c_k in terms:
        for p_l, c_l in terms:
            norm = math.sqrt(
                math.prod(math.factorial(n) for n in p_k) * math.prod(math.factorial(n) for n in p_l)
            )
            total += np.conj(c_k) * c_l * permanent(build_submatrix(gram, p_l, p_k)) / norm
    return float(total.real)


def survival_probability_propagated(layout: CircuitLayout, state: FockAmplitudeVector) -> float:
    """Norm left after sparse propagation of the no-loss branch."""
    _check_input(layout, state)
    return propagate(layout, state).norm_squared()


def loss_distribution(photons: int, eta: float) -> list[float]:
    """
    P(r photons survive) for |photons> through a single loss channel.

    Computed by extended-space evolution and a trace over the loss mode.
    """
    layout = CircuitLayout.build(1, [[Element.loss(0, eta)]])
    compiled = compile_layout(layout, Space.EXTENDED)
    evolved = evolve_state(compiled.matrix, FockAmplitudeVector.basis(FockPattern((photons, 0))))
    dist = [0.0] * (photons + 1)
    for pattern, amp in evolved.entries.items():
        dist[pattern[0]] += abs(amp) ** 2
    return dist


def binomial_loss_law(photons: int, eta: float) -> list[float]:
    """C(n, r) eta^r (1 - eta)^(n - r) for r = 0..n."""
    return [
        float(comb(photons, r, exact=True)) * eta**r * (1 - eta) ** (photons - r)
        for r in range(photons + 1)
    ]
