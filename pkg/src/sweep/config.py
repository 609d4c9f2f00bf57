"""
Run configuration for threshold searches and slice sweeps.

A config file is JSON, checked first against schema/sweep_config.schema.json
and then parsed into `SweepConfig`, which enforces the physical bounds.
"""

import json
from enum import Enum
from pathlib import Path
from typing import Any, Optional, Union

from jsonschema import Draft202012Validator
from jsonschema import ValidationError as SchemaValidationError
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from ..bsm import CATALOG_NAMES, DEFAULT_SWEEP_SCHEMES
from ..errors import ConfigError
from ..fbqc import EncodingMode, FusionNetwork
from ..loss import DEFAULT_LAYER_LENGTH_UM, LossParams


class Axis(str, Enum):
    """Loss-parameter axes."""

    P_EFF = "p_eff"
    BS_LOSS_DB = "bs_loss_db"
    PROP_LOSS_DB_PER_CM = "prop_loss_db_per_cm"

    @property
    def units(self) -> str:
        return {"p_eff": "", "bs_loss_db": "dB", "prop_loss_db_per_cm": "dB/cm"}[self.value]

    @property
    def ideal(self) -> float:
        return 1.0 if self is Axis.P_EFF else 0.0


def loss_point(
    values: dict[Axis, float], layer_length_um: float = DEFAULT_LAYER_LENGTH_UM
) -> LossParams:
    """LossParams with the given axes set and every other axis ideal."""
    return LossParams.effective(
        p_eff=values.get(Axis.P_EFF, Axis.P_EFF.ideal),
        bs_loss_db=values.get(Axis.BS_LOSS_DB, Axis.BS_LOSS_DB.ideal),
        prop_loss_db_per_cm=values.get(Axis.PROP_LOSS_DB_PER_CM, Axis.PROP_LOSS_DB_PER_CM.ideal),
        layer_length_um=layer_length_um,
    )


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    SVG = "svg"


class AxisRange(BaseModel):
    start: float = Field(..., description="First grid value")
    stop: float = Field(..., description="Last grid value")
    points: int = Field(41, ge=2, description="Grid resolution")

    @model_validator(mode="after")
    def _check_order(self) -> "AxisRange":
        if self.stop <= self.start:
            raise ValueError(f"Axis range must increase, got {self.start}..{self.stop}")
        return self

    def values(self) -> list[float]:
        step = (self.stop - self.start) / (self.points - 1)
        return [self.start + i * step for i in range(self.points - 1)] + [self.stop]


def _default_axes() -> dict[Axis, AxisRange]:
    return {
        Axis.P_EFF: AxisRange(start=0.95, stop=1.0),
        Axis.BS_LOSS_DB: AxisRange(start=0.0, stop=0.1),
        Axis.PROP_LOSS_DB_PER_CM: AxisRange(start=0.0, stop=1.0),
    }


class SweepConfig(BaseModel):
    """Everything a threshold/sweep run needs."""

    schemes: list[str] = Field(default_factory=lambda: list(DEFAULT_SWEEP_SCHEMES))
    networks: list[FusionNetwork] = Field(default_factory=lambda: list(FusionNetwork))
    encodings: list[EncodingMode] = Field(default_factory=lambda: list(EncodingMode))
    axes: dict[Axis, AxisRange] = Field(default_factory=_default_axes)
    layer_length_um: float = Field(DEFAULT_LAYER_LENGTH_UM, gt=0.0)
    bisection_tolerance: float = Field(1e-4, gt=0.0, lt=0.1)
    worker_count: int = Field(1, ge=1)
    output_dir: Path = Field(Path("results"))
    formats: list[OutputFormat] = Field(default_factory=lambda: [OutputFormat.CSV, OutputFormat.JSON])
    seed: Optional[int] = Field(None, description="Reserved; every computation is deterministic")

    @field_validator("schemes")
    @classmethod
    def _known_schemes(cls, value: list[str]) -> list[str]:
        unknown = [name for name in value if name not in CATALOG_NAMES]
        if unknown:
            raise ValueError(f"Unknown schemes: {', '.join(unknown)}")
        if not value:
            raise ValueError("At least one scheme is required")
        return value

    @field_validator("axes")
    @classmethod
    def _physical_ranges(cls, value: dict[Axis, AxisRange]) -> dict[Axis, AxisRange]:
        merged = {**_default_axes(), **value}
        p_eff = merged[Axis.P_EFF]
        if p_eff.start < 0.0 or p_eff.stop > 1.0:
            raise ValueError("p_eff range must lie within [0, 1]")
        for axis in (Axis.BS_LOSS_DB, Axis.PROP_LOSS_DB_PER_CM):
            if merged[axis].start < 0.0:
                raise ValueError(f"{axis.value} range must be non-negative")
        return merged


def _load_schema() -> dict[str, Any]:
    """Load the run-config schema from the schema directory."""
    schema_path = Path(__file__).parent.parent.parent / "schema" / "sweep_config.schema.json"
    if not schema_path.exists():
        raise FileNotFoundError(f"Schema file not found: {schema_path}")
    with open(schema_path) as f:
        return json.load(f)  # type: ignore[no-any-return]


def parse_config(data: dict[str, Any]) -> SweepConfig:
    """
    Validate a config mapping and build the model.

    Raises:
        ConfigError: If the mapping fails the JSON schema or the model bounds
    """
    try:
        Draft202012Validator(_load_schema()).validate(data)
    except SchemaValidationError as e:
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise ConfigError(f"Config schema violation at {where}: {e.message}") from e
    try:
        return SweepConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"Invalid config: {e}") from e


def load_config(path: Union[str, Path]) -> SweepConfig:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f"Config file {path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must hold a JSON object")
    return parse_config(data)
