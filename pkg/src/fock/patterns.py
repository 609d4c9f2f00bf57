"""
Fock basis patterns and sparse amplitude vectors.
"""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Union

import numpy as np
from scipy.special import comb

from ..errors import ContractViolation

NORM_TOLERANCE = 1e-10


@dataclass(frozen=True, order=True)
class FockPattern:
    """Photon counts per mode."""

    occupations: tuple[int, ...]

    def __post_init__(self) -> None:
        occ = tuple(int(n) for n in self.occupations)
        if any(n < 0 for n in occ):
            raise ContractViolation(f"Negative occupation in pattern {occ}")
        object.__setattr__(self, "occupations", occ)

    @classmethod
    def of(cls, *occupations: int) -> "FockPattern":
        return cls(tuple(occupations))

    @property
    def mode_count(self) -> int:
        return len(self.occupations)

    @property
    def total_photons(self) -> int:
        return sum(self.occupations)

    def __iter__(self) -> Iterator[int]:
        return iter(self.occupations)

    def __len__(self) -> int:
        return len(self.occupations)

    def __getitem__(self, index: int) -> int:
        return self.occupations[index]

    def __str__(self) -> str:
        return "|" + ",".join(str(n) for n in self.occupations) + ">"


def pattern_count(mode_count: int, photon_count: int) -> int:
    """Number of weak compositions of photon_count into mode_count parts."""
    return int(comb(photon_count + mode_count - 1, mode_count - 1, exact=True))


def iter_patterns(mode_count: int, photon_count: int) -> Iterator[tuple[int, ...]]:
    """Yield occupation tuples in descending lexicographic order."""
    if mode_count == 1:
        yield (photon_count,)
        return
    for first in range(photon_count, -1, -1):
        for rest in iter_patterns(mode_count - 1, photon_count - first):
            yield (first, *rest)


def enumerate_patterns(mode_count: int, photon_count: int) -> list[FockPattern]:
    """
    All patterns of photon_count photons over mode_count modes.

    The order is fixed: descending lexicographic, so (2, 1) gives
    [(1, 0), (0, 1)] and the all-in-first-mode pattern always comes first.
    """
    if mode_count < 1:
        raise ContractViolation(f"mode_count must be >= 1, got {mode_count}")
    if photon_count < 0:
        raise ContractViolation(f"photon_count must be >= 0, got {photon_count}")
    return [FockPattern(p) for p in iter_patterns(mode_count, photon_count)]


PatternLike = Union[FockPattern, tuple[int, ...]]


def as_pattern(pattern: PatternLike) -> FockPattern:
    return pattern if isinstance(pattern, FockPattern) else FockPattern(tuple(pattern))


@dataclass
class FockAmplitudeVector:
    """Sparse state vector over Fock patterns sharing one mode count."""

    mode_count: int
    entries: dict[FockPattern, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: dict[FockPattern, complex] = {}
        for key, amp in self.entries.items():
            pattern = as_pattern(key)
            if pattern.mode_count != self.mode_count:
                raise ContractViolation(
                    f"Pattern {pattern} has {pattern.mode_count} modes, expected {self.mode_count}"
                )
            cleaned[pattern] = cleaned.get(pattern, 0j) + complex(amp)
        self.entries = cleaned

    @classmethod
    def from_terms(
        cls,
        terms: Iterable[tuple[PatternLike, complex]],
        normalize: bool = True,
    ) -> "FockAmplitudeVector":
        """Build a state from (pattern, coefficient) pairs."""
        items = [(as_pattern(p), complex(c)) for p, c in terms]
        if not items:
            raise ContractViolation("A state needs at least one term")
        state = cls(items[0][0].mode_count, {})
        for pattern, amp in items:
            if pattern.mode_count != state.mode_count:
                raise ContractViolation("All terms must share a mode count")
            state.entries[pattern] = state.entries.get(pattern, 0j) + amp
        return state.normalized() if normalize else state

    @classmethod
    def basis(cls, pattern: PatternLike) -> "FockAmplitudeVector":
        p = as_pattern(pattern)
        return cls(p.mode_count, {p: 1.0 + 0j})

    def norm_squared(self) -> float:
        return float(sum(abs(a) ** 2 for a in self.entries.values()))

    def normalized(self) -> "FockAmplitudeVector":
        norm = np.sqrt(self.norm_squared())
        if norm == 0:
            raise ContractViolation("Cannot normalize a zero vector")
        return FockAmplitudeVector(self.mode_count, {p: a / norm for p, a in self.entries.items()})

    def photon_numbers(self) -> set[int]:
        return {p.total_photons for p, a in self.entries.items() if abs(a) > 0}

    def total_photons(self) -> int:
        """Photon number of a fixed-number state."""
        numbers = self.photon_numbers()
        if len(numbers) != 1:
            raise ContractViolation(f"State mixes photon numbers {sorted(numbers)}")
        return numbers.pop()

    def tensor(self, other: "FockAmplitudeVector") -> "FockAmplitudeVector":
        """Product state with other's modes appended after ours."""
        out: dict[FockPattern, complex] = {}
        for pa, ca in self.entries.items():
            for pb, cb in other.entries.items():
                out[FockPattern(pa.occupations + pb.occupations)] = ca * cb
        return FockAmplitudeVector(self.mode_count + other.mode_count, out)

    def embed(self, width: int, modes: list[int]) -> "FockAmplitudeVector":
        """Place this state's modes at the given positions of a wider register."""
        if len(modes) != self.mode_count or len(set(modes)) != len(modes):
            raise ContractViolation(f"Need {self.mode_count} distinct target modes, got {modes}")
        out: dict[FockPattern, complex] = {}
        for pattern, amp in self.entries.items():
            occ = [0] * width
            for src, dst in enumerate(modes):
                occ[dst] = pattern[src]
            out[FockPattern(tuple(occ))] = amp
        return FockAmplitudeVector(width, out)

    def probabilities(self) -> dict[FockPattern, float]:
        return {p: abs(a) ** 2 for p, a in self.entries.items()}

    def get(self, pattern: PatternLike) -> complex:
        return self.entries.get(as_pattern(pattern), 0j)

    def close_to(self, other: "FockAmplitudeVector", atol: float = 1e-9) -> bool:
        keys = set(self.entries) | set(other.entries)
        return all(abs(self.entries.get(k, 0j) - other.entries.get(k, 0j)) <= atol for k in keys)

    def equal_up_to_phase(self, other: "FockAmplitudeVector", atol: float = 1e-9) -> bool:
        """Compare two states ignoring a global phase."""
        overlap = sum(np.conj(self.get(p)) * a for p, a in other.entries.items())
        if abs(overlap) == 0:
            return False
        phase = overlap / abs(overlap)
        rotated = FockAmplitudeVector(self.mode_count, {p: a * phase for p, a in self.entries.items()})
        return rotated.close_to(other, atol)

    def as_mapping(self) -> Mapping[FockPattern, complex]:
        return dict(self.entries)
