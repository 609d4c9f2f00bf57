"""
Marginal loss thresholds and the joint feasibility check.

A marginal threshold varies one loss axis with the other two ideal and
bisects for the point where the effective erasure crosses the network
threshold.
"""

import logging
from typing import Optional

from pydantic import BaseModel, Field

from ..bsm import BsmScheme, success_probability
from ..errors import ContractViolation
from ..fbqc import EncodingMode, ErasureAssessment, FusionNetwork, assess, bisect
from ..loss import DEFAULT_LAYER_LENGTH_UM, LossParams, reported_p_loss
from .config import Axis, loss_point

logger = logging.getLogger(__name__)

# Upper search bound for the dB axes; p_loss is essentially 1 long before.
MAX_DB_SEARCH = 1e3


def correctable_at(
    scheme: BsmScheme,
    params: LossParams,
    network: FusionNetwork,
    encoding: EncodingMode,
) -> ErasureAssessment:
    return assess(success_probability(scheme), reported_p_loss(scheme, params), network, encoding)


def marginal_threshold(
    scheme: BsmScheme,
    network: FusionNetwork,
    encoding: EncodingMode,
    axis: Axis,
    tolerance: float = 1e-4,
    layer_length_um: float = DEFAULT_LAYER_LENGTH_UM,
) -> Optional[float]:
    """
    Boundary of the correctable region along one axis, others ideal.

    Returns:
        The smallest tolerable p_eff, or the largest tolerable dB value;
        None if the scheme is not correctable even without loss
    """

    def ok(value: float) -> bool:
        params = loss_point({axis: value}, layer_length_um)
        return correctable_at(scheme, params, network, encoding).correctable

    if not ok(axis.ideal):
        logger.info("%s on %s/%s: no threshold", scheme.name, network.value, encoding.value)
        return None
    if axis is Axis.P_EFF:
        return bisect(ok, 0.0, 1.0, tolerance)
    high = 1.0
    while ok(high):
        high *= 2.0
        if high > MAX_DB_SEARCH:
            raise ContractViolation(f"{scheme.name}: no {axis.value} threshold below {MAX_DB_SEARCH}")
    return bisect(ok, 0.0, high, tolerance)


class JointCheck(BaseModel):
    """Correctability at one joint loss point plus the generation budget."""

    scheme: str
    network: FusionNetwork
    encoding: EncodingMode
    p_eff: float
    bs_loss_db: float
    prop_loss_db_per_cm: float
    assessment: ErasureAssessment
    p_det: float = Field(..., ge=0.0, le=1.0)
    marginal_p_eff_threshold: Optional[float]
    required_p_gen: Optional[float] = Field(
        None, description="p_gen needed at the given p_det to reach the marginal p_eff threshold"
    )


def joint_check(
    scheme: BsmScheme,
    network: FusionNetwork = FusionNetwork.SIX_RING,
    encoding: EncodingMode = EncodingMode.SHOR_2_2,
    p_eff: float = 0.97,
    bs_loss_db: float = 0.048,
    prop_loss_db_per_cm: float = 0.48,
    p_det: float = 0.98,
    tolerance: float = 1e-4,
    layer_length_um: float = DEFAULT_LAYER_LENGTH_UM,
) -> JointCheck:
    """Evaluate all three loss sources together at a single point."""
    params = LossParams.effective(p_eff, bs_loss_db, prop_loss_db_per_cm, layer_length_um)
    assessment = correctable_at(scheme, params, network, encoding)
    marginal = marginal_threshold(scheme, network, encoding, Axis.P_EFF, tolerance, layer_length_um)
    required = None
    if marginal is not None and p_det > 0:
        required = marginal / p_det
    return JointCheck(
        scheme=scheme.name,
        network=network,
        encoding=encoding,
        p_eff=p_eff,
        bs_loss_db=bs_loss_db,
        prop_loss_db_per_cm=prop_loss_db_per_cm,
        assessment=assessment,
        p_det=p_det,
        marginal_p_eff_threshold=marginal,
        required_p_gen=required,
    )
