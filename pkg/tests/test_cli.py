"""
Tests for the fusion-cli command-line interface.
"""

import json
import tempfile
from pathlib import Path

import pytest

from src.cli import EXIT_CONFIG, EXIT_OK, build_parser, run

DATA = Path(__file__).parent.parent / "data"


def test_parser_requires_a_command():
    """Test running without a subcommand exits."""
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_unknown_scheme_is_rejected_by_parser():
    """Scheme names are restricted to the catalog."""
    with pytest.raises(SystemExit):
        build_parser().parse_args(["threshold", "--scheme", "boosted-unknown-xx"])


def test_validate_single_scheme():
    """Test validate command on one scheme."""
    assert run(["validate", "--scheme", "regular-xx"]) == EXIT_OK


def test_validate_exports_catalog():
    """Validate can export the catalog dump."""
    with tempfile.TemporaryDirectory() as out:
        target = Path(out) / "catalog.txt"
        assert run(["validate", "--scheme", "regular-zz", "--export-catalog", str(target)]) == EXIT_OK
        assert target.read_text().startswith("scheme regular-zz\n")


def test_threshold_writes_report():
    """Threshold command writes the configured report files."""
    with tempfile.TemporaryDirectory() as out:
        code = run([
            "threshold", "--scheme", "boosted-phi+-xx", "--network", "six_ring",
            "--encoding", "shor_2_2", "--axis", "p_eff", "--tolerance", "0.001",
            "--out", out, "--format", "csv", "--format", "json",
        ])
        assert code == EXIT_OK
        document = json.loads((Path(out) / "thresholds.json").read_text())
        result = document["results"][0]
        assert result["marginal_p_eff_threshold"] == pytest.approx(0.973, abs=0.002)
        assert (Path(out) / "thresholds.csv").read_text().count("\n") == 2


def test_report_re_emits_results():
    """Report command reformats saved results."""
    with tempfile.TemporaryDirectory() as out:
        run([
            "threshold", "--scheme", "regular-xx", "--network", "six_ring", "--encoding", "bare",
            "--axis", "p_eff", "--out", out, "--format", "json",
        ])
        again = Path(out) / "again"
        code = run(["report", "--results", str(Path(out) / "thresholds.json"), "--out", str(again)])
        assert code == EXIT_OK
        lines = (again / "thresholds.csv").read_text().splitlines()
        assert lines[1].split(",")[6] == "none"


def test_sweep_with_small_grid():
    """Test sweep command with a reduced grid."""
    with tempfile.TemporaryDirectory() as out:
        code = run([
            "sweep", "--scheme", "boosted-phi+-xx", "--network", "six_ring", "--encoding", "shor_2_2",
            "--points", "3", "--tolerance", "0.001", "--out", out, "--format", "csv", "--format", "svg",
        ])
        assert code == EXIT_OK
        assert len(list((Path(out) / "slices").glob("*.csv"))) == 3
        assert len(list((Path(out) / "plots").glob("*.svg"))) == 3


def test_joint_check():
    """Test joint-check command output and exit code."""
    assert run(["joint-check"]) == EXIT_OK
    assert run(["joint-check", "--scheme", "regular-xx", "--p-eff", "0.99"]) == EXIT_OK


def test_bad_config_exits_with_config_code():
    """An invalid config exits with the config error code."""
    with tempfile.NamedTemporaryFile(mode="w", suffix=".json", delete=False) as f:
        json.dump({"networks": ["honeycomb"]}, f)
        temp_path = f.name
    try:
        assert run(["threshold", "--config", temp_path]) == EXIT_CONFIG
    finally:
        Path(temp_path).unlink(missing_ok=True)


def test_missing_config_exits_with_config_code():
    """A missing config file exits with the config error code."""
    assert run(["sweep", "--config", "/nonexistent/config.json"]) == EXIT_CONFIG


def test_circuit_override_needs_one_scheme():
    """A circuit override applies to exactly one scheme."""
    circuit = DATA / "circuits" / "regular-xx.circuit"
    code = run(["threshold", "--scheme", "regular-xx", "--scheme", "regular-zz", "--circuit", str(circuit)])
    assert code == EXIT_CONFIG


def test_circuit_override_width_mismatch():
    """Test an override of the wrong width is rejected."""
    circuit = DATA / "circuits" / "regular-xx.circuit"
    code = run(["threshold", "--scheme", "boosted-phi+-xx", "--circuit", str(circuit), "--axis", "p_eff"])
    assert code == EXIT_CONFIG


def test_circuit_override_from_golden_file():
    """A checked-in circuit file is accepted as a layout override."""
    circuit = DATA / "circuits" / "boosted-phiplus-xx.circuit"
    code = run([
        "threshold", "--scheme", "boosted-phi+-xx", "--network", "six_ring", "--encoding", "shor_2_2",
        "--axis", "p_eff", "--tolerance", "0.01", "--circuit", str(circuit),
    ])
    assert code == EXIT_OK
