"""
Hardware loss model: parameters, loss-channel instrumentation and p_loss.
"""

from .instrument import LossySchemeInstance, instrument, instrument_layout
from .p_loss import (
    P_LOSS_METHODS,
    compute_p_loss,
    input_dependence,
    p_loss_profile,
    reported_p_loss,
    scheme_p_loss,
    static_bias_partner,
)
from .params import DEFAULT_LAYER_LENGTH_UM, LossParams, db_to_transmission, transmission_to_db

__all__ = [
    "DEFAULT_LAYER_LENGTH_UM",
    "P_LOSS_METHODS",
    "LossParams",
    "LossySchemeInstance",
    "compute_p_loss",
    "db_to_transmission",
    "input_dependence",
    "instrument",
    "instrument_layout",
    "p_loss_profile",
    "reported_p_loss",
    "scheme_p_loss",
    "static_bias_partner",
]
