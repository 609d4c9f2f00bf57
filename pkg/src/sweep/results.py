"""
Threshold results: one record per (scheme, network, encoding).
"""

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Optional

from pydantic import BaseModel, Field

from ..bsm import bell_success_probabilities, get_scheme, success_probability
from ..circuits import CircuitLayout
from ..fbqc import EncodingMode, FusionNetwork, min_p_succ
from .config import Axis, SweepConfig
from .slices import SliceDataset, SliceSample
from .thresholds import marginal_threshold

logger = logging.getLogger(__name__)


class ThresholdResult(BaseModel):
    """Marginal thresholds of one scheme on one network/encoding."""

    scheme: str
    ancilla: str
    p_succ: float = Field(..., ge=0.0, le=1.0)
    p_succ_per_bell: dict[str, float] = Field(default_factory=dict)
    network: FusionNetwork
    encoding: EncodingMode
    min_p_succ: float
    axes: list[Axis] = Field(default_factory=lambda: list(Axis), description="Axes that were bisected")
    marginal_p_eff_threshold: Optional[float] = None
    marginal_bs_db_threshold: Optional[float] = None
    marginal_prop_db_per_cm_threshold: Optional[float] = None
    element_counts: dict[str, int] = Field(default_factory=dict)
    slice_samples: list[SliceSample] = Field(default_factory=list, exclude=True)

    def threshold(self, axis: Axis) -> Optional[float]:
        return {
            Axis.P_EFF: self.marginal_p_eff_threshold,
            Axis.BS_LOSS_DB: self.marginal_bs_db_threshold,
            Axis.PROP_LOSS_DB_PER_CM: self.marginal_prop_db_per_cm_threshold,
        }[axis]


@dataclass(frozen=True)
class ThresholdTask:
    scheme: str
    layout: Optional[CircuitLayout]
    network: FusionNetwork
    encoding: EncodingMode
    axis: Axis
    tolerance: float
    layer_length_um: float


def evaluate_threshold(task: ThresholdTask) -> tuple[ThresholdTask, Optional[float]]:
    scheme = get_scheme(task.scheme, task.layout)
    value = marginal_threshold(
        scheme, task.network, task.encoding, task.axis, task.tolerance, task.layer_length_um
    )
    return task, value


def _run_tasks(tasks: list[ThresholdTask], workers: int) -> dict[ThresholdTask, Optional[float]]:
    values: dict[ThresholdTask, Optional[float]] = {}
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(evaluate_threshold, task) for task in tasks]
            for fut in as_completed(futures):
                task, value = fut.result()
                values[task] = value
    else:
        for task in tasks:
            _, values[task] = evaluate_threshold(task)
    return values


def compute_threshold_results(
    config: SweepConfig,
    axes: Optional[list[Axis]] = None,
    layouts: Optional[dict[str, CircuitLayout]] = None,
) -> list[ThresholdResult]:
    """Bisect marginal thresholds for every configured combination, in config order."""
    layouts = layouts or {}
    axes = axes or list(Axis)
    tasks = [
        ThresholdTask(name, layouts.get(name), network, encoding, axis,
                      config.bisection_tolerance, config.layer_length_um)
        for name in config.schemes
        for network in config.networks
        for encoding in config.encodings
        for axis in axes
    ]
    logger.info("Bisecting %d marginal thresholds", len(tasks))
    values = _run_tasks(tasks, config.worker_count)

    results = []
    for name in config.schemes:
        scheme = get_scheme(name, layouts.get(name))
        per_bell = {b.value: p for b, p in bell_success_probabilities(scheme).items()}
        for network in config.networks:
            for encoding in config.encodings:
                found = {
                    task.axis: value
                    for task, value in values.items()
                    if task.scheme == name and task.network is network and task.encoding is encoding
                }
                results.append(
                    ThresholdResult(
                        scheme=name,
                        ancilla=scheme.ancilla.label.display,
                        p_succ=success_probability(scheme),
                        p_succ_per_bell=per_bell,
                        network=network,
                        encoding=encoding,
                        min_p_succ=min_p_succ(network, encoding),
                        axes=list(axes),
                        marginal_p_eff_threshold=found.get(Axis.P_EFF),
                        marginal_bs_db_threshold=found.get(Axis.BS_LOSS_DB),
                        marginal_prop_db_per_cm_threshold=found.get(Axis.PROP_LOSS_DB_PER_CM),
                        element_counts=scheme.element_counts(),
                    )
                )
    return results


def attach_slices(results: list[ThresholdResult], datasets: list[SliceDataset]) -> None:
    """Copy slice samples onto the matching threshold results."""
    for result in results:
        result.slice_samples = [
            sample
            for ds in datasets
            if ds.scheme == result.scheme and ds.network is result.network and ds.encoding is result.encoding
            for sample in ds.samples
        ]
