#!/usr/bin/env python3
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Optional

from jsonschema import ValidationError as SchemaValidationError
from pydantic import ValidationError
from rich import print
from rich.console import Console
from rich.table import Table

try:
    from .bsm import CATALOG_NAMES, export_catalog, get_scheme
    from .circuits import CircuitLayout, load_layout
    from .errors import ConfigError, ContractViolation
    from .fbqc import EncodingMode, FusionNetwork
    from .logging_setup import configure_logging
    from .sweep import (
        Axis,
        SweepConfig,
        ThresholdResult,
        attach_slices,
        compute_threshold_results,
        export_report,
        joint_check,
        load_config,
        load_results,
        sweep_slices,
        validate_catalog,
    )
except ImportError:
    # Fallback for when running as script
    from bsm import CATALOG_NAMES, export_catalog, get_scheme  # type: ignore
    from circuits import CircuitLayout, load_layout  # type: ignore
    from errors import ConfigError, ContractViolation  # type: ignore
    from fbqc import EncodingMode, FusionNetwork  # type: ignore
    from logging_setup import configure_logging  # type: ignore
    from sweep import (  # type: ignore
        Axis,
        SweepConfig,
        ThresholdResult,
        attach_slices,
        compute_threshold_results,
        export_report,
        joint_check,
        load_config,
        load_results,
        sweep_slices,
        validate_catalog,
    )

logger = logging.getLogger("fusion_cli")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFIG = 2

console = Console()


def build_config(args: argparse.Namespace) -> SweepConfig:
    """Config file (or defaults) with command-line overrides applied."""
    config = load_config(args.config) if getattr(args, "config", None) else SweepConfig()
    updates: dict[str, Any] = {}
    if getattr(args, "schemes", None):
        updates["schemes"] = args.schemes
    if getattr(args, "networks", None):
        updates["networks"] = args.networks
    if getattr(args, "encodings", None):
        updates["encodings"] = args.encodings
    if getattr(args, "out", None):
        updates["output_dir"] = args.out
    if getattr(args, "formats", None):
        updates["formats"] = args.formats
    if getattr(args, "workers", None):
        updates["worker_count"] = args.workers
    if getattr(args, "tolerance", None):
        updates["bisection_tolerance"] = args.tolerance
    if getattr(args, "seed", None) is not None:
        updates["seed"] = args.seed
    if getattr(args, "points", None):
        updates["axes"] = {
            axis.value: {"start": r.start, "stop": r.stop, "points": args.points}
            for axis, r in config.axes.items()
        }
    if not updates:
        return config
    try:
        return SweepConfig.model_validate({**config.model_dump(), **updates})
    except ValidationError as e:
        raise ConfigError(f"Invalid command-line override: {e}") from e


def circuit_overrides(args: argparse.Namespace, config: SweepConfig) -> dict[str, CircuitLayout]:
    if not getattr(args, "circuit", None):
        return {}
    if len(config.schemes) != 1:
        raise ConfigError("--circuit needs exactly one --scheme")
    layout = load_layout(args.circuit)
    name = config.schemes[0]
    get_scheme(name, layout)
    print(f"[blue]Using[/blue] layout {args.circuit} for {name}")
    return {name: layout}


def _fmt(value: Optional[float], digits: int = 5) -> str:
    return "-" if value is None else f"{value:.{digits}f}"


def print_threshold_table(results: list[ThresholdResult]) -> None:
    table = Table(title="Marginal thresholds")
    for column in ("scheme", "ancilla", "p_succ", "network", "encoding", "p_eff", "bs [dB]", "prop [dB/cm]", "BS/layers"):
        table.add_column(column)
    for r in results:
        counts = r.element_counts
        table.add_row(
            r.scheme,
            r.ancilla,
            _fmt(r.p_succ, 4),
            r.network.value,
            r.encoding.value,
            _fmt(r.marginal_p_eff_threshold),
            _fmt(r.marginal_bs_db_threshold),
            _fmt(r.marginal_prop_db_per_cm_threshold),
            f"{counts.get('beamsplitters', 0)}/{counts.get('layers', 0)}",
        )
    console.print(table)


def cmd_validate(args: argparse.Namespace) -> int:
    """Check lossless catalog values and min_p_succ inversions."""
    names = args.schemes or [n for n in CATALOG_NAMES if not (args.skip_slow and "b2" in n)]
    print(f"[blue]Validating[/blue] {len(names)} scheme(s)")
    report = validate_catalog(names)

    table = Table(title="Catalog validation")
    for column in ("check", "expected", "observed", "result", "note"):
        table.add_column(column)
    for c in report.checks:
        result = "[green]PASS[/green]" if c.passed else "[red]FAIL[/red]"
        table.add_row(c.name, _fmt(c.expected, 6), _fmt(c.observed, 6), result, c.note)
    console.print(table)

    if args.export_catalog:
        count = export_catalog(args.export_catalog, names)
        print(f"[green]✅ Wrote[/green] {count} scheme(s) to {args.export_catalog}")

    if not report.passed:
        print(f"[red]❌ {len(report.failures)} check(s) failed[/red]")
        return EXIT_VALIDATION
    print("[green]✅ All checks passed[/green]")
    return EXIT_OK


def cmd_threshold(args: argparse.Namespace) -> int:
    """Bisect marginal thresholds."""
    config = build_config(args)
    layouts = circuit_overrides(args, config)
    axes = [Axis(a) for a in args.axes] if args.axes else None
    print(f"[blue]Bisecting[/blue] thresholds for {len(config.schemes)} scheme(s)")
    results = compute_threshold_results(config, axes, layouts)
    print_threshold_table(results)
    if args.out:
        written = export_report(results, config.output_dir, config.formats)
        print(f"[green]✅ Wrote[/green] {len(written)} file(s) to {config.output_dir}")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Thresholds plus 2-D slices of the correctable region."""
    config = build_config(args)
    layouts = circuit_overrides(args, config)
    print(f"[blue]Sweeping[/blue] {len(config.schemes)} scheme(s) with {config.worker_count} worker(s)")
    results = compute_threshold_results(config, layouts=layouts)
    datasets = sweep_slices(config, layouts)
    attach_slices(results, datasets)
    print_threshold_table(results)
    written = export_report(results, config.output_dir, config.formats, datasets)
    print(f"[green]✅ Wrote[/green] {len(written)} file(s) to {config.output_dir}")
    print(f"[green]   →[/green] {len(datasets)} slice dataset(s)")
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    """Re-emit a JSON results table in other formats."""
    results = load_results(args.results)
    formats = args.formats or ["csv"]
    if "svg" in formats:
        print("[yellow]⚠️  Slice data is not stored in results tables; skipping svg[/yellow]")
        formats = [f for f in formats if f != "svg"]
    written = export_report(results, args.out, formats)
    print_threshold_table(results)
    print(f"[green]✅ Wrote[/green] {len(written)} file(s) to {args.out}")
    return EXIT_OK


def cmd_joint_check(args: argparse.Namespace) -> int:
    """Correctability with all loss sources active at once."""
    scheme = get_scheme(args.scheme, load_layout(args.circuit) if args.circuit else None)
    check = joint_check(
        scheme,
        FusionNetwork(args.network),
        EncodingMode(args.encoding),
        p_eff=args.p_eff,
        bs_loss_db=args.bs_db,
        prop_loss_db_per_cm=args.prop_db,
        p_det=args.p_det,
    )
    a = check.assessment
    print(f"[blue]Scheme[/blue]: {check.scheme} on {check.network.value}/{check.encoding.value}")
    print(f"[blue]Point[/blue]: p_eff={check.p_eff} bs={check.bs_loss_db} dB prop={check.prop_loss_db_per_cm} dB/cm")
    print(f"[blue]p_loss[/blue]: {a.p_loss:.5f}  [blue]erasure[/blue]: {a.effective_erasure:.5f} (threshold {a.threshold_p_er})")
    if a.correctable:
        print("[green]✅ Correctable[/green]")
    else:
        print("[yellow]⚠️  Not correctable[/yellow]")
    print(f"[blue]Marginal p_eff threshold[/blue]: {_fmt(check.marginal_p_eff_threshold)}")
    print(f"[blue]Required p_gen at p_det={check.p_det}[/blue]: {_fmt(check.required_p_gen)}")
    return EXIT_OK


def _add_selection(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON run config (see schema/sweep_config.schema.json)")
    parser.add_argument("--scheme", dest="schemes", action="append", choices=CATALOG_NAMES,
                        help="Catalog scheme (repeatable; default: config)")
    parser.add_argument("--network", dest="networks", action="append",
                        choices=[n.value for n in FusionNetwork], help="Fusion network (repeatable)")
    parser.add_argument("--encoding", dest="encodings", action="append",
                        choices=[e.value for e in EncodingMode], help="Encoding (repeatable)")
    parser.add_argument("--out", help="Output directory")
    parser.add_argument("--format", dest="formats", action="append", choices=["csv", "json", "svg"],
                        help="Output format (repeatable)")
    parser.add_argument("--workers", type=int, help="Worker processes")
    parser.add_argument("--tolerance", type=float, help="Bisection tolerance on the swept axis")
    parser.add_argument("--seed", type=int, help="Reserved; all computation is deterministic")
    parser.add_argument("--circuit", help="Layout file replacing the selected scheme's layout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fusion-cli",
        description="Fusion Loss Lab CLI - lossy linear-optical fusion thresholds",
        epilog="""
Examples:
  # Check lossless success probabilities
  fusion-cli validate --skip-slow

  # Marginal thresholds of the |Phi+>-boosted scheme
  fusion-cli threshold --scheme boosted-phi+-xx --network six_ring --encoding shor_2_2

  # Full slice sweep with plots
  fusion-cli sweep --config data/configs/desk_scale.json --format svg --workers 4

  # Joint feasibility at 0.97 / 0.048 dB / 0.48 dB/cm
  fusion-cli joint-check --scheme boosted-phi+-xx
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    ap.add_argument("--version", action="version", version="fusion-cli 0.1.0")
    ap.add_argument("-v", "--verbose", action="count", default=0, help="More logging (-v info, -vv debug)")

    sub = ap.add_subparsers(dest="cmd", required=True)

    ap_validate = sub.add_parser("validate", help="Validate lossless catalog values")
    ap_validate.add_argument("--scheme", dest="schemes", action="append", choices=CATALOG_NAMES,
                             help="Scheme to validate (repeatable; default: all)")
    ap_validate.add_argument("--skip-slow", action="store_true", help="Skip the 16-mode scheme")
    ap_validate.add_argument("--export-catalog", help="Write the catalog as structured text")
    ap_validate.set_defaults(func=cmd_validate)

    ap_threshold = sub.add_parser("threshold", help="Bisect marginal loss thresholds")
    _add_selection(ap_threshold)
    ap_threshold.add_argument("--axis", dest="axes", action="append", choices=[a.value for a in Axis],
                              help="Axis to bisect (repeatable; default: all)")
    ap_threshold.set_defaults(func=cmd_threshold)

    ap_sweep = sub.add_parser("sweep", help="Thresholds plus 2-D correctable-region slices")
    _add_selection(ap_sweep)
    ap_sweep.add_argument("--points", type=int, help="Grid points per axis")
    ap_sweep.set_defaults(func=cmd_sweep)

    ap_report = sub.add_parser("report", help="Re-emit a JSON results table")
    ap_report.add_argument("--results", required=True, help="thresholds.json written by threshold/sweep")
    ap_report.add_argument("--out", required=True, help="Output directory")
    ap_report.add_argument("--format", dest="formats", action="append", choices=["csv", "json", "svg"],
                           help="Output format (repeatable; default: csv)")
    ap_report.set_defaults(func=cmd_report)

    ap_joint = sub.add_parser("joint-check", help="Evaluate all loss sources at one point")
    ap_joint.add_argument("--scheme", default="boosted-phi+-xx", choices=CATALOG_NAMES)
    ap_joint.add_argument("--network", default=FusionNetwork.SIX_RING.value, choices=[n.value for n in FusionNetwork])
    ap_joint.add_argument("--encoding", default=EncodingMode.SHOR_2_2.value, choices=[e.value for e in EncodingMode])
    ap_joint.add_argument("--p-eff", type=float, default=0.97)
    ap_joint.add_argument("--bs-db", type=float, default=0.048)
    ap_joint.add_argument("--prop-db", type=float, default=0.48)
    ap_joint.add_argument("--p-det", type=float, default=0.98, help="Detector efficiency for the p_gen budget")
    ap_joint.add_argument("--circuit", help="Layout file replacing the scheme's layout")
    ap_joint.set_defaults(func=cmd_joint_check)
    return ap


def run(argv: Optional[list[str]] = None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return int(args.func(args))
    except (ConfigError, ContractViolation, ValidationError, SchemaValidationError, FileNotFoundError) as e:
        print(f"[red]❌ Configuration error[/red]: {e}")
        return EXIT_CONFIG
    except OSError as e:
        print(f"[red]❌ Output error[/red]: {e}")
        print("[red]   →[/red] Check that the output directory is writable")
        return EXIT_CONFIG


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
