"""
Two-dimensional slices of the correctable region.

Each slice varies two loss axes with the third ideal. The p_loss grid is
computed once per (scheme, slice) and reused for every network/encoding pair.
Rows are independent tasks; results are merged by grid index, so the output
does not depend on the worker count or completion order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Optional

from pydantic import BaseModel, Field

from ..bsm import get_scheme, success_probability
from ..circuits import CircuitLayout
from ..fbqc import EncodingMode, FusionNetwork, assess
from ..loss import reported_p_loss
from .config import Axis, SweepConfig, loss_point

logger = logging.getLogger(__name__)

SLICE_AXES: tuple[tuple[Axis, Axis], ...] = (
    (Axis.P_EFF, Axis.BS_LOSS_DB),
    (Axis.P_EFF, Axis.PROP_LOSS_DB_PER_CM),
    (Axis.BS_LOSS_DB, Axis.PROP_LOSS_DB_PER_CM),
)


class SliceSample(BaseModel):
    x: float
    y: float
    p_loss: float = Field(..., ge=0.0, le=1.0)
    effective_erasure: float
    correctable: bool


class SliceDataset(BaseModel):
    """Grid samples of one slice; samples are row-major in (x, y)."""

    scheme: str
    network: FusionNetwork
    encoding: EncodingMode
    x_axis: Axis
    y_axis: Axis
    x_values: list[float]
    y_values: list[float]
    samples: list[SliceSample]

    @property
    def name(self) -> str:
        return f"{self.x_axis.value}__{self.y_axis.value}"

    def flags(self) -> list[list[bool]]:
        width = len(self.y_values)
        return [
            [s.correctable for s in self.samples[i * width : (i + 1) * width]]
            for i in range(len(self.x_values))
        ]


@dataclass(frozen=True)
class RowTask:
    scheme: str
    layout: Optional[CircuitLayout]
    slice_index: int
    row: int
    x_value: float
    y_values: tuple[float, ...]
    layer_length_um: float


def evaluate_row(task: RowTask) -> tuple[tuple[str, int, int], list[float]]:
    """p_loss along one grid row; top level so worker processes can import it."""
    scheme = get_scheme(task.scheme, task.layout)
    x_axis, y_axis = SLICE_AXES[task.slice_index]
    values = [
        reported_p_loss(scheme, loss_point({x_axis: task.x_value, y_axis: y}, task.layer_length_um))
        for y in task.y_values
    ]
    return (task.scheme, task.slice_index, task.row), values


def _row_tasks(config: SweepConfig, layouts: dict[str, CircuitLayout]) -> list[RowTask]:
    tasks = []
    for name in config.schemes:
        for index, (x_axis, y_axis) in enumerate(SLICE_AXES):
            y_values = tuple(config.axes[y_axis].values())
            for row, x in enumerate(config.axes[x_axis].values()):
                tasks.append(
                    RowTask(name, layouts.get(name), index, row, x, y_values, config.layer_length_um)
                )
    return tasks


def compute_p_loss_grids(
    config: SweepConfig, layouts: Optional[dict[str, CircuitLayout]] = None
) -> dict[tuple[str, int, int], list[float]]:
    """
    p_loss rows keyed by (scheme, slice index, row index).

    On interruption or a worker failure the rows finished so far are returned
    and the error is logged.
    """
    tasks = _row_tasks(config, layouts or {})
    rows: dict[tuple[str, int, int], list[float]] = {}
    use_mp = config.worker_count > 1 and len(tasks) > 1
    logger.info("Evaluating %d grid rows with %d worker(s)", len(tasks), config.worker_count)
    try:
        if use_mp:
            with ProcessPoolExecutor(max_workers=config.worker_count) as executor:
                futures = [executor.submit(evaluate_row, task) for task in tasks]
                for fut in as_completed(futures):
                    key, values = fut.result()
                    rows[key] = values
        else:
            for task in tasks:
                key, values = evaluate_row(task)
                rows[key] = values
    except KeyboardInterrupt:
        logger.warning("Sweep interrupted; keeping %d of %d rows", len(rows), len(tasks))
    except (MemoryError, OSError) as e:
        logger.error("Sweep aborted (%s); keeping %d of %d rows", e, len(rows), len(tasks))
    return rows


def sweep_slices(
    config: SweepConfig, layouts: Optional[dict[str, CircuitLayout]] = None
) -> list[SliceDataset]:
    """Slice datasets for every configured scheme, network, encoding and axis pair."""
    layouts = layouts or {}
    rows = compute_p_loss_grids(config, layouts)
    datasets = []
    for name in config.schemes:
        p_succ = success_probability(get_scheme(name, layouts.get(name)))
        for index, (x_axis, y_axis) in enumerate(SLICE_AXES):
            x_values = config.axes[x_axis].values()
            y_values = config.axes[y_axis].values()
            complete = all((name, index, row) in rows for row in range(len(x_values)))
            if not complete:
                logger.warning("%s %s/%s: incomplete grid skipped", name, x_axis.value, y_axis.value)
                continue
            for network in config.networks:
                for encoding in config.encodings:
                    samples = []
                    for row, x in enumerate(x_values):
                        for y, p_loss in zip(y_values, rows[(name, index, row)]):
                            result = assess(p_succ, p_loss, network, encoding)
                            samples.append(
                                SliceSample(
                                    x=x,
                                    y=y,
                                    p_loss=p_loss,
                                    effective_erasure=result.effective_erasure,
                                    correctable=result.correctable,
                                )
                            )
                    datasets.append(
                        SliceDataset(
                            scheme=name,
                            network=network,
                            encoding=encoding,
                            x_axis=x_axis,
                            y_axis=y_axis,
                            x_values=x_values,
                            y_values=y_values,
                            samples=samples,
                        )
                    )
    return datasets
