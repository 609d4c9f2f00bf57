"""
Hardware loss parameters and dB conventions.

A loss of x dB corresponds to a transmissivity of 10^(-x/10). Propagation
loss is quoted per cm and converted to a per-layer transmissivity using the
layer length in micrometers.
"""

import math

from pydantic import BaseModel, ConfigDict, Field

from ..errors import ContractViolation

UM_PER_CM = 1e4
DEFAULT_LAYER_LENGTH_UM = 500.0


def db_to_transmission(db: float) -> float:
    """Transmissivity of a component with `db` decibels of loss."""
    if db < 0:
        raise ContractViolation(f"Loss in dB must be non-negative, got {db}")
    return float(10 ** (-db / 10))


def transmission_to_db(eta: float) -> float:
    if not 0 < eta <= 1:
        raise ContractViolation(f"Transmissivity must be in (0, 1], got {eta}")
    return float(-10 * math.log10(eta))


class LossParams(BaseModel):
    """One point of the hardware loss space."""

    model_config = ConfigDict(frozen=True)

    p_gen: float = Field(1.0, ge=0.0, le=1.0, description="Per-photon generation efficiency")
    p_det: float = Field(1.0, ge=0.0, le=1.0, description="Per-detector efficiency")
    bs_loss_db: float = Field(0.0, ge=0.0, description="Loss per beamsplitter in dB")
    prop_loss_db_per_cm: float = Field(0.0, ge=0.0, description="Propagation loss in dB/cm")
    layer_length_um: float = Field(
        DEFAULT_LAYER_LENGTH_UM, gt=0.0, description="Physical length of one layer in micrometers"
    )

    @classmethod
    def effective(
        cls,
        p_eff: float = 1.0,
        bs_loss_db: float = 0.0,
        prop_loss_db_per_cm: float = 0.0,
        layer_length_um: float = DEFAULT_LAYER_LENGTH_UM,
    ) -> "LossParams":
        """Parameters with all generation/detection loss folded into p_gen."""
        return cls(
            p_gen=p_eff,
            p_det=1.0,
            bs_loss_db=bs_loss_db,
            prop_loss_db_per_cm=prop_loss_db_per_cm,
            layer_length_um=layer_length_um,
        )

    @property
    def p_eff(self) -> float:
        return self.p_gen * self.p_det

    @property
    def eta_bs(self) -> float:
        return db_to_transmission(self.bs_loss_db)

    @property
    def layer_loss_db(self) -> float:
        return self.prop_loss_db_per_cm * self.layer_length_um / UM_PER_CM

    @property
    def eta_layer(self) -> float:
        return db_to_transmission(self.layer_loss_db)

    @property
    def is_lossless(self) -> bool:
        return self.p_eff == 1.0 and self.bs_loss_db == 0.0 and self.prop_loss_db_per_cm == 0.0
