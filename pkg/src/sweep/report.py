"""
Export threshold results and slice datasets.

Results table (CSV and JSON), one CSV per slice and optional SVG plots.
Rows follow config order and numbers are written with repr(), so reruns of
the same config produce byte-identical files.
"""

import csv
import json
import logging
from pathlib import Path
from typing import Any, Optional, Sequence, TextIO, Union

from jsonschema import Draft202012Validator

from .config import Axis, OutputFormat
from .results import ThresholdResult
from .slices import SliceDataset
from .svg import write_slice_svg

logger = logging.getLogger(__name__)

NO_THRESHOLD = "none"

TABLE_COLUMNS = [
    "scheme",
    "ancilla",
    "p_succ",
    "network",
    "encoding",
    "axis",
    "threshold_value",
    "units",
    "min_p_succ",
    "layers",
    "beamsplitters",
    "swaps",
]

SLICE_COLUMNS = ["p_loss", "effective_erasure", "correctable"]


def _number(value: Optional[float]) -> str:
    return NO_THRESHOLD if value is None else repr(float(value))


def table_rows(results: list[ThresholdResult]) -> list[dict[str, str]]:
    """Flatten results to one row per bisected axis."""
    rows = []
    for r in results:
        for axis in r.axes:
            rows.append(
                {
                    "scheme": r.scheme,
                    "ancilla": r.ancilla,
                    "p_succ": _number(r.p_succ),
                    "network": r.network.value,
                    "encoding": r.encoding.value,
                    "axis": axis.value,
                    "threshold_value": _number(r.threshold(axis)),
                    "units": axis.units,
                    "min_p_succ": _number(r.min_p_succ),
                    "layers": str(r.element_counts.get("layers", "")),
                    "beamsplitters": str(r.element_counts.get("beamsplitters", "")),
                    "swaps": str(r.element_counts.get("swaps", "")),
                }
            )
    return rows


def to_csv(results: list[ThresholdResult], output: Union[str, Path, TextIO]) -> int:
    """
    Write the results table as CSV.

    Returns:
        Number of data rows written; an empty result list still gets a header
    """
    if isinstance(output, (str, Path)):
        with open(output, "w", newline="", encoding="utf-8") as f:
            return _write_csv(results, f)
    return _write_csv(results, output)


def _write_csv(results: list[ThresholdResult], file_obj: TextIO) -> int:
    writer = csv.DictWriter(file_obj, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    rows = table_rows(results)
    writer.writerows(rows)
    return len(rows)


def results_document(results: list[ThresholdResult]) -> dict[str, Any]:
    return {"results": [r.model_dump(mode="json") for r in results]}


def _load_schema() -> dict[str, Any]:
    """Load the results schema from the schema directory."""
    schema_path = Path(__file__).parent.parent.parent / "schema" / "threshold_results.schema.json"
    if not schema_path.exists():
        raise FileNotFoundError(f"Schema file not found: {schema_path}")
    with open(schema_path) as f:
        return json.load(f)  # type: ignore[no-any-return]


def validate_results_document(document: dict[str, Any]) -> None:
    """
    Raises:
        jsonschema.ValidationError: If the document does not match the schema
    """
    Draft202012Validator(_load_schema()).validate(document)


def to_json(results: list[ThresholdResult], output: Union[str, Path]) -> int:
    document = results_document(results)
    validate_results_document(document)
    with open(output, "w", encoding="utf-8") as f:
        json.dump(document, f, indent=2, sort_keys=True, ensure_ascii=False)
        f.write("\n")
    return len(results)


def load_results(path: Union[str, Path]) -> list[ThresholdResult]:
    """Read a JSON results table written by `to_json`."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Results file not found: {path}")
    with open(path, encoding="utf-8") as f:
        document = json.load(f)
    validate_results_document(document)
    return [ThresholdResult.model_validate(item) for item in document["results"]]


def slice_filename(dataset: SliceDataset, suffix: str) -> str:
    scheme = dataset.scheme.replace("+", "plus").replace("-", "_")
    return f"{scheme}__{dataset.network.value}__{dataset.encoding.value}__{dataset.name}.{suffix}"


def write_slice_csv(dataset: SliceDataset, output: Union[str, Path]) -> int:
    columns = [dataset.x_axis.value, dataset.y_axis.value] + SLICE_COLUMNS
    with open(output, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        for s in dataset.samples:
            writer.writerow(
                [repr(s.x), repr(s.y), repr(s.p_loss), repr(s.effective_erasure), str(s.correctable).lower()]
            )
    return len(dataset.samples)


def export_report(
    results: list[ThresholdResult],
    out_dir: Union[str, Path],
    formats: Sequence[Union[OutputFormat, str]],
    datasets: Optional[list[SliceDataset]] = None,
) -> list[Path]:
    """
    Write every requested artifact under `out_dir`.

    Returns:
        Paths written, in creation order

    Raises:
        OSError: If the output directory cannot be created or written
        ValueError: If a format is not supported
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for requested in formats:
        try:
            fmt = OutputFormat(requested)
        except ValueError:
            raise ValueError(f"Unsupported format: {requested}. Use 'csv', 'json' or 'svg'") from None
        if fmt is OutputFormat.CSV:
            path = out / "thresholds.csv"
            to_csv(results, path)
            written.append(path)
            for ds in datasets or []:
                slice_path = out / "slices" / slice_filename(ds, "csv")
                slice_path.parent.mkdir(exist_ok=True)
                write_slice_csv(ds, slice_path)
                written.append(slice_path)
        elif fmt is OutputFormat.JSON:
            path = out / "thresholds.json"
            to_json(results, path)
            written.append(path)
        elif fmt is OutputFormat.SVG:
            for ds in datasets or []:
                svg_path = out / "plots" / slice_filename(ds, "svg")
                svg_path.parent.mkdir(exist_ok=True)
                write_slice_svg(ds, svg_path, _marginal_marks(results, ds))
                written.append(svg_path)
    logger.info("Wrote %d files to %s", len(written), out)
    return written


def _marginal_marks(results: list[ThresholdResult], dataset: SliceDataset) -> dict[Axis, float]:
    for r in results:
        if r.scheme == dataset.scheme and r.network is dataset.network and r.encoding is dataset.encoding:
            marks = {}
            for axis in (dataset.x_axis, dataset.y_axis):
                value = r.threshold(axis)
                if axis in r.axes and value is not None:
                    marks[axis] = value
            return marks
    return {}
