"""
Erasure probabilities of fusion measurements and network correctability.

Under the static bias arrangement half of the fusions fail onto one
measurement basis and half onto the other, so a failed fusion erases a given
single outcome with probability 1/2. A lost photon erases both outcomes.
"""

import logging
from enum import Enum
from typing import Callable, Optional

from pydantic import BaseModel, Field

from ..errors import ContractViolation

logger = logging.getLogger(__name__)

BISECTION_TOLERANCE = 1e-6


class FusionNetwork(str, Enum):
    """Fusion networks with their erasure thresholds."""

    SIX_RING = "six_ring"
    FOUR_STAR = "four_star"

    @property
    def threshold_p_er(self) -> float:
        return _THRESHOLDS[self]


_THRESHOLDS = {
    FusionNetwork.SIX_RING: 0.1198,
    FusionNetwork.FOUR_STAR: 0.0690,
}


class EncodingMode(str, Enum):
    BARE = "bare"
    SHOR_2_2 = "shor_2_2"


class ErasureAssessment(BaseModel):
    """Erasure figures for one (p_succ, p_loss) point on one network."""

    network: FusionNetwork
    encoding: EncodingMode
    p_succ: float = Field(..., ge=0.0, le=1.0)
    p_loss: float = Field(..., ge=0.0, le=1.0)
    p_0: float = Field(..., ge=0.0, le=1.0, description="Single-outcome erasure probability")
    p_enc: Optional[float] = Field(None, ge=0.0, le=1.0, description="Erasure after (2,2)-Shor encoding")
    effective_erasure: float = Field(..., ge=0.0, le=1.0)
    threshold_p_er: float
    correctable: bool


def _check_probability(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ContractViolation(f"{name} must be in [0, 1], got {value}")


def erasure_p0(p_succ: float, p_loss: float) -> float:
    """Probability that a single fusion outcome is erased."""
    _check_probability("p_succ", p_succ)
    _check_probability("p_loss", p_loss)
    return 1.0 - (1.0 - p_loss) * (1.0 - (1.0 - p_succ) / 2.0)


def erasure_shor(p_0: float) -> float:
    """Erasure probability of an outcome encoded in the (2,2)-Shor code."""
    _check_probability("p_0", p_0)
    both_blocks = (1.0 - (1.0 - p_0) ** 2) ** 2
    either_pair = 1.0 - (1.0 - p_0**2) ** 2
    return (both_blocks + either_pair) / 2.0


def effective_erasure(p_0: float, encoding: EncodingMode) -> float:
    return erasure_shor(p_0) if encoding is EncodingMode.SHOR_2_2 else p_0


def bisect(
    predicate: Callable[[float], bool],
    low: float,
    high: float,
    tolerance: float = BISECTION_TOLERANCE,
) -> float:
    """
    Boundary of a monotone predicate on [low, high].

    `predicate(low)` and `predicate(high)` must differ; the returned point is
    within `tolerance` of the switch.
    """
    at_low = predicate(low)
    if at_low == predicate(high):
        raise ContractViolation(f"Predicate does not change sign on [{low}, {high}]")
    iterations = 0
    while high - low > tolerance:
        mid = (low + high) / 2.0
        if predicate(mid) == at_low:
            low = mid
        else:
            high = mid
        iterations += 1
    logger.debug("bisection converged after %d iterations", iterations)
    return (low + high) / 2.0


def max_correctable_p0(network: FusionNetwork, encoding: EncodingMode) -> float:
    """Largest single-outcome erasure p_0 the network tolerates."""
    threshold = network.threshold_p_er
    if encoding is EncodingMode.BARE:
        return threshold
    # erasure_shor is increasing on [0, 1] and crosses every threshold below 0.5.
    return bisect(lambda p: erasure_shor(p) < threshold, 0.0, 0.5)


def min_p_succ(network: FusionNetwork, encoding: EncodingMode) -> float:
    """Smallest lossless p_succ whose erasure is below the network threshold."""
    return 1.0 - 2.0 * max_correctable_p0(network, encoding)


def max_p_loss(p_succ: float, network: FusionNetwork, encoding: EncodingMode) -> Optional[float]:
    """
    Largest p_loss still correctable for a scheme with the given p_succ.

    Returns None when the scheme is not correctable even without loss.
    """
    _check_probability("p_succ", p_succ)
    budget = max_correctable_p0(network, encoding)
    lossless_p0 = (1.0 - p_succ) / 2.0
    if lossless_p0 >= budget:
        return None
    return 1.0 - (1.0 - budget) / (1.0 - lossless_p0)


def assess(
    p_succ: float,
    p_loss: float,
    network: FusionNetwork,
    encoding: EncodingMode,
) -> ErasureAssessment:
    """Erasure figures for a scheme point and whether the network corrects them."""
    p_0 = erasure_p0(p_succ, p_loss)
    p_enc = erasure_shor(p_0) if encoding is EncodingMode.SHOR_2_2 else None
    effective = p_enc if p_enc is not None else p_0
    threshold = network.threshold_p_er
    return ErasureAssessment(
        network=network,
        encoding=encoding,
        p_succ=p_succ,
        p_loss=p_loss,
        p_0=p_0,
        p_enc=p_enc,
        effective_erasure=effective,
        threshold_p_er=threshold,
        correctable=effective < threshold,
    )
