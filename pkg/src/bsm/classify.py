"""
Detection-pattern classification for BSM schemes.

Every full-photon-count pattern that occurs for at least one Bell input is
classified from its probabilities under the four Bell inputs:

* nonzero for exactly one Bell state: success, identifying that state;
* nonzero for exactly the two states sharing an eigenvalue of the scheme's
  failure operator: failure, with that eigenvalue as outcome;
* anything else is unclassifiable.

Patterns with fewer photons than were injected are losses.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Optional

from ..circuits import compile_layout, propagate
from ..errors import CatalogIntegrityError, ContractViolation
from ..fock import FockPattern, evolve_state
from ..fock.patterns import PatternLike, as_pattern
from .schemes import BsmScheme, FailureBasis
from .states import BellLabel, bell_state

logger = logging.getLogger(__name__)

CLASSIFICATION_TOLERANCE = 1e-10

BELL_ORDER = tuple(BellLabel)


class OutcomeKind(str, Enum):
    SUCCESS = "success"
    FAILURE = "failure"
    LOSS = "loss"
    UNCLASSIFIABLE = "unclassifiable"


@dataclass(frozen=True)
class PatternClass:
    """
    Classification of one detection pattern.

    `bell` is set for successes; `operator` and `outcome` for failures.
    `probabilities` holds P(pattern | Bell input) in BELL_ORDER.
    """

    pattern: FockPattern
    kind: OutcomeKind
    bell: Optional[BellLabel] = None
    operator: Optional[FailureBasis] = None
    outcome: Optional[int] = None
    probabilities: tuple[float, ...] = ()

    def describe(self) -> str:
        if self.kind is OutcomeKind.SUCCESS and self.bell is not None:
            return f"success {self.bell.value}"
        if self.kind is OutcomeKind.FAILURE and self.operator is not None:
            return f"failure {self.operator.value}={self.outcome:+d}"
        return self.kind.value


def output_distributions(
    scheme: BsmScheme, method: str = "propagate"
) -> dict[BellLabel, dict[FockPattern, float]]:
    """
    Lossless output pattern probabilities for each Bell input.

    Args:
        scheme: Scheme to simulate
        method: "propagate" for sparse element-wise propagation or "evolve"
            for permanents of the compiled transfer matrix
    """
    layout = scheme.layout.without_losses()
    distributions = {}
    for label in BELL_ORDER:
        state = scheme.input_state(bell_state(label).representation)
        if method == "propagate":
            evolved = propagate(layout, state)
        elif method == "evolve":
            evolved = evolve_state(compile_layout(layout).matrix, state)
        else:
            raise ContractViolation(f"Unknown simulation method: {method}")
        distributions[label] = evolved.probabilities()
    return distributions


def classify_probabilities(
    pattern: FockPattern,
    probabilities: tuple[float, ...],
    failure_basis: FailureBasis,
    tolerance: float = CLASSIFICATION_TOLERANCE,
) -> PatternClass:
    present = [label for label, p in zip(BELL_ORDER, probabilities) if p > tolerance]
    if len(present) == 1:
        return PatternClass(pattern, OutcomeKind.SUCCESS, bell=present[0], probabilities=probabilities)
    if len(present) == 2:
        first, second = (label.eigenvalue(failure_basis.value) for label in present)
        if first == second:
            return PatternClass(
                pattern,
                OutcomeKind.FAILURE,
                operator=failure_basis,
                outcome=first,
                probabilities=probabilities,
            )
    return PatternClass(pattern, OutcomeKind.UNCLASSIFIABLE, probabilities=probabilities)


@dataclass(frozen=True)
class ClassificationTable:
    """Immutable pattern classification for one scheme."""

    scheme_name: str
    photon_count: int
    failure_basis: FailureBasis
    classes: tuple[PatternClass, ...]
    _index: dict[FockPattern, PatternClass] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {c.pattern: c for c in self.classes})

    def lookup(self, pattern: PatternLike) -> PatternClass:
        """Class of a detected pattern; short patterns are losses."""
        p = as_pattern(pattern)
        if p.total_photons < self.photon_count:
            return PatternClass(p, OutcomeKind.LOSS)
        found = self._index.get(p)
        if found is None:
            raise ContractViolation(f"Pattern {p} cannot occur in {self.scheme_name}")
        return found

    @property
    def unclassifiable(self) -> tuple[PatternClass, ...]:
        return tuple(c for c in self.classes if c.kind is OutcomeKind.UNCLASSIFIABLE)

    def probability(self, kind: OutcomeKind, bell: BellLabel) -> float:
        index = BELL_ORDER.index(bell)
        return float(sum(c.probabilities[index] for c in self.classes if c.kind is kind))

    def bell_success_probabilities(self) -> dict[BellLabel, float]:
        return {label: self.probability(OutcomeKind.SUCCESS, label) for label in BELL_ORDER}

    def success_probability(self) -> float:
        per_bell = self.bell_success_probabilities()
        return sum(per_bell.values()) / len(per_bell)

    def counts(self) -> dict[str, int]:
        result = {kind.value: 0 for kind in OutcomeKind if kind is not OutcomeKind.LOSS}
        for c in self.classes:
            result[c.kind.value] += 1
        return result


def build_classification_table(
    scheme: BsmScheme,
    method: str = "propagate",
    tolerance: float = CLASSIFICATION_TOLERANCE,
) -> ClassificationTable:
    distributions = output_distributions(scheme, method)
    patterns = sorted(set().union(*distributions.values()), reverse=True)
    classes = tuple(
        classify_probabilities(
            pattern,
            tuple(distributions[label].get(pattern, 0.0) for label in BELL_ORDER),
            scheme.failure_basis,
            tolerance,
        )
        for pattern in patterns
    )
    table = ClassificationTable(scheme.name, scheme.photon_count, scheme.failure_basis, classes)
    logger.debug("%s: %s", scheme.name, table.counts())
    return table


@lru_cache(maxsize=128)
def classification_table(scheme: BsmScheme) -> ClassificationTable:
    """Cached, integrity-checked classification of a scheme."""
    table = build_classification_table(scheme)
    bad = table.unclassifiable
    if bad:
        raise CatalogIntegrityError(
            f"{scheme.name}: {len(bad)} unclassifiable patterns, first {bad[0].pattern}"
        )
    return table


def classify_patterns(scheme: BsmScheme, strict: bool = True) -> list[PatternClass]:
    """
    Classes of every occurring full-photon-count output pattern.

    Raises:
        CatalogIntegrityError: If strict and any pattern is unclassifiable
    """
    if strict:
        return list(classification_table(scheme).classes)
    return list(build_classification_table(scheme).classes)


def bell_success_probabilities(scheme: BsmScheme) -> dict[BellLabel, float]:
    return classification_table(scheme).bell_success_probabilities()


def success_probability(scheme: BsmScheme) -> float:
    """Lossless success probability averaged over the four Bell inputs."""
    return classification_table(scheme).success_probability()
