"""
Regular and boosted Bell-state measurement schemes.
"""

from .catalog_export import export_catalog, format_scheme
from .classify import (
    BELL_ORDER,
    ClassificationTable,
    OutcomeKind,
    PatternClass,
    bell_success_probabilities,
    build_classification_table,
    classification_table,
    classify_patterns,
    output_distributions,
    success_probability,
)
from .schemes import (
    CATALOG_NAMES,
    DEFAULT_SWEEP_SCHEMES,
    BsmScheme,
    FailureBasis,
    build_boosted_bsm,
    build_regular_bsm,
    catalog,
    get_scheme,
    planar_skeleton,
    with_failure_basis,
)
from .states import (
    COMPUTATIONAL_PRODUCTS,
    DEFAULT_LOGICAL_INPUT,
    AncillaLabel,
    AncillaState,
    BellLabel,
    BellState,
    ancilla_state,
    bell_state,
    product_state,
    qubit_state,
)

__all__ = [
    "BELL_ORDER",
    "CATALOG_NAMES",
    "COMPUTATIONAL_PRODUCTS",
    "DEFAULT_LOGICAL_INPUT",
    "DEFAULT_SWEEP_SCHEMES",
    "AncillaLabel",
    "AncillaState",
    "BellLabel",
    "BellState",
    "BsmScheme",
    "ClassificationTable",
    "FailureBasis",
    "OutcomeKind",
    "PatternClass",
    "ancilla_state",
    "bell_state",
    "bell_success_probabilities",
    "build_boosted_bsm",
    "build_classification_table",
    "build_regular_bsm",
    "catalog",
    "classification_table",
    "classify_patterns",
    "export_catalog",
    "format_scheme",
    "get_scheme",
    "output_distributions",
    "planar_skeleton",
    "product_state",
    "qubit_state",
    "success_probability",
    "with_failure_basis",
]
