"""
Probability that at least one photon is lost inside a lossy scheme.
"""

import logging
from functools import lru_cache
from typing import Optional

from ..bsm import (
    COMPUTATIONAL_PRODUCTS,
    DEFAULT_LOGICAL_INPUT,
    BsmScheme,
    catalog,
    product_state,
)
from ..circuits import (
    compile_layout,
    survival_probability,
    survival_probability_extended,
    survival_probability_gram,
    survival_probability_propagated,
)
from ..errors import ContractViolation
from ..fock import FockAmplitudeVector
from .instrument import LossySchemeInstance, instrument
from .params import LossParams

logger = logging.getLogger(__name__)

P_LOSS_METHODS = ("gram", "enumerate", "propagate", "extended")


def _clip(value: float) -> float:
    return min(1.0, max(0.0, value))


def compute_p_loss(
    instance: LossySchemeInstance,
    input_qubits: Optional[FockAmplitudeVector] = None,
    method: str = "gram",
) -> float:
    """
    1 - P(all photons survive) for a logical two-qubit input plus the ancilla.

    Args:
        instance: Instrumented scheme
        input_qubits: Two-qubit state over (h1, v1, h2, v2); |+>|+> when omitted
        method: "gram" (permanents of L^dagger L), "enumerate" (sum over all
            outputs of the reduced-space matrix), "propagate" (sparse no-loss
            branch) or "extended" (unitary extended space, loss modes traced out)
    """
    qubits = input_qubits if input_qubits is not None else product_state(*DEFAULT_LOGICAL_INPUT)
    state = instance.base.input_state(qubits)
    layout = instance.instrumented_layout
    if method == "gram":
        survival = survival_probability_gram(compile_layout(layout).matrix, state)
    elif method == "enumerate":
        survival = survival_probability(layout, state)
    elif method == "propagate":
        survival = survival_probability_propagated(layout, state)
    elif method == "extended":
        survival = survival_probability_extended(layout, state)
    else:
        raise ContractViolation(f"Unknown p_loss method {method!r}; use one of {P_LOSS_METHODS}")
    return _clip(1.0 - survival)


def p_loss_profile(scheme: BsmScheme, params: LossParams, method: str = "gram") -> dict[str, float]:
    """p_loss for the default input and each computational product input."""
    instance = instrument(scheme, params)
    profile = {DEFAULT_LOGICAL_INPUT: compute_p_loss(instance, method=method)}
    for label in COMPUTATIONAL_PRODUCTS:
        profile[label] = compute_p_loss(instance, product_state(*label), method=method)
    return profile


def input_dependence(profile: dict[str, float]) -> float:
    """Spread of p_loss across the profiled logical inputs."""
    return max(profile.values()) - min(profile.values())


@lru_cache(maxsize=4096)
def scheme_p_loss(scheme: BsmScheme, params: LossParams) -> float:
    """Conservative p_loss: the maximum over the profiled logical inputs."""
    profile = p_loss_profile(scheme, params)
    spread = input_dependence(profile)
    if spread > 1e-12:
        logger.debug("%s: p_loss depends on the logical input (spread %.3g)", scheme.name, spread)
    return max(profile.values())


def reported_p_loss(scheme: BsmScheme, params: LossParams) -> float:
    """
    p_loss used for threshold analysis.

    The XX- and ZZ-failure variants of a catalog scheme form a static-bias
    pair and both get the larger of their p_loss values.
    """
    value = scheme_p_loss(scheme, params)
    partner = static_bias_partner(scheme)
    if partner is not None:
        value = max(value, scheme_p_loss(partner, params))
    return value


def static_bias_partner(scheme: BsmScheme) -> Optional[BsmScheme]:
    """The other failure-basis variant of a catalog scheme; None for overrides."""
    schemes = catalog()
    if schemes.get(scheme.name) is not scheme:
        return None
    own = f"-{scheme.failure_basis.value.lower()}"
    other = f"-{scheme.failure_basis.other.value.lower()}"
    if not scheme.name.endswith(own):
        return None
    return schemes.get(scheme.name[: -len(own)] + other)
