"""
Batch driver: catalog validation, marginal thresholds, slice sweeps and reports.
"""

from .config import Axis, AxisRange, OutputFormat, SweepConfig, load_config, loss_point, parse_config
from .report import export_report, load_results, table_rows, to_csv, to_json, write_slice_csv
from .results import ThresholdResult, attach_slices, compute_threshold_results
from .slices import SLICE_AXES, SliceDataset, SliceSample, compute_p_loss_grids, sweep_slices
from .svg import frontier, render_slice_svg, write_slice_svg
from .thresholds import JointCheck, correctable_at, joint_check, marginal_threshold
from .validate import ValidationCheck, ValidationReport, validate_catalog

__all__ = [
    "SLICE_AXES",
    "Axis",
    "AxisRange",
    "JointCheck",
    "OutputFormat",
    "SliceDataset",
    "SliceSample",
    "SweepConfig",
    "ThresholdResult",
    "ValidationCheck",
    "ValidationReport",
    "attach_slices",
    "compute_p_loss_grids",
    "compute_threshold_results",
    "correctable_at",
    "export_report",
    "frontier",
    "joint_check",
    "load_config",
    "load_results",
    "loss_point",
    "marginal_threshold",
    "parse_config",
    "render_slice_svg",
    "sweep_slices",
    "table_rows",
    "to_csv",
    "to_json",
    "validate_catalog",
    "write_slice_csv",
    "write_slice_svg",
]
