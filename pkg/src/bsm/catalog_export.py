"""
Structured-text export of the scheme catalog for golden-file regression.
"""

from pathlib import Path
from typing import Iterable, Optional, TextIO, Union

from ..circuits import format_layout
from .classify import BELL_ORDER, ClassificationTable, classification_table
from .schemes import BsmScheme, catalog


def format_scheme(scheme: BsmScheme, table: Optional[ClassificationTable] = None) -> str:
    """
    Render one scheme: header fields, layout records and classification table.

    Args:
        scheme: Scheme to render
        table: Precomputed classification; computed when omitted

    Returns:
        Text block ending in a newline
    """
    table = table or classification_table(scheme)
    per_bell = table.bell_success_probabilities()
    lines = [
        f"scheme {scheme.name}",
        f"ancilla {scheme.ancilla.label.display}",
        f"photons {scheme.photon_count}",
        f"qubit_modes {' '.join(map(str, scheme.qubit_modes))}",
        f"ancilla_modes {' '.join(map(str, scheme.ancilla_modes))}".rstrip(),
        f"failure_basis {scheme.failure_basis.value}",
        f"p_succ {table.success_probability():.12f}",
        "p_succ_per_bell " + " ".join(f"{b.value}={per_bell[b]:.12f}" for b in BELL_ORDER),
        "layout",
    ]
    lines += ["  " + line for line in format_layout(scheme.layout).splitlines()]
    lines.append("patterns")
    for c in table.classes:
        probs = " ".join(f"{p:.12f}" for p in c.probabilities)
        lines.append(f"  {''.join(map(str, c.pattern.occupations))} {c.describe()} {probs}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def export_catalog(
    output: Union[str, Path, TextIO], names: Optional[Iterable[str]] = None
) -> int:
    """
    Write the catalog (or the named subset) as structured text.

    Returns:
        Number of schemes written
    """
    schemes = catalog()
    selected = list(names) if names is not None else list(schemes)
    if isinstance(output, (str, Path)):
        with open(output, "w", encoding="utf-8") as f:
            return _write_catalog(selected, schemes, f)
    return _write_catalog(selected, schemes, output)


def _write_catalog(names: list[str], schemes: dict[str, BsmScheme], file_obj: TextIO) -> int:
    for name in names:
        file_obj.write(format_scheme(schemes[name]))
        file_obj.write("\n")
    return len(names)
