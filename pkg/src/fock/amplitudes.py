"""
Transfer matrices and multi-photon transition amplitudes.

A linear-optical network with transfer matrix U maps creation operators as
a_k^dagger -> sum_j U[j, k] a_j^dagger. The amplitude between Fock patterns
is the permanent of a submatrix of U with repeated rows and columns.
"""

import enum
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np
from numpy.typing import ArrayLike

from ..errors import ContractViolation
from .patterns import (
    FockAmplitudeVector,
    FockPattern,
    PatternLike,
    as_pattern,
    enumerate_patterns,
)
from .permanent import permanent

MATRIX_TOLERANCE = 1e-10


class MatrixKind(str, enum.Enum):
    UNITARY = "unitary"
    SUBUNITARY = "subunitary"


@dataclass(frozen=True)
class TransferMatrix:
    """Square complex matrix flagged unitary or subunitary."""

    entries: np.ndarray
    kind: MatrixKind = MatrixKind.UNITARY

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ContractViolation(f"Transfer matrix must be square, got {a.shape}")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def unitary(cls, entries: ArrayLike, check: bool = True) -> "TransferMatrix":
        tm = cls(np.asarray(entries), MatrixKind.UNITARY)
        if check and not tm.is_unitary():
            raise ContractViolation("Matrix flagged unitary fails U^dagger U = I")
        return tm

    @classmethod
    def subunitary(cls, entries: ArrayLike, check: bool = True) -> "TransferMatrix":
        tm = cls(np.asarray(entries), MatrixKind.SUBUNITARY)
        if check and not tm.is_contraction():
            raise ContractViolation("Matrix flagged subunitary has a singular value above 1")
        return tm

    @classmethod
    def identity(cls, width: int) -> "TransferMatrix":
        return cls(np.eye(width, dtype=complex), MatrixKind.UNITARY)

    @property
    def dimension(self) -> int:
        return int(self.entries.shape[0])

    def is_unitary(self, atol: float = MATRIX_TOLERANCE) -> bool:
        u = self.entries
        return bool(np.allclose(u.conj().T @ u, np.eye(self.dimension), atol=atol, rtol=0))

    def is_contraction(self, atol: float = MATRIX_TOLERANCE) -> bool:
        if self.dimension == 0:
            return True
        return bool(np.linalg.svd(self.entries, compute_uv=False).max() <= 1 + atol)

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        kind = (
            MatrixKind.UNITARY
            if self.kind is MatrixKind.UNITARY and other.kind is MatrixKind.UNITARY
            else MatrixKind.SUBUNITARY
        )
        return TransferMatrix(self.entries @ other.entries, kind)


def _as_transfer(transfer: "TransferMatrix | ArrayLike") -> TransferMatrix:
    if isinstance(transfer, TransferMatrix):
        return transfer
    return TransferMatrix(np.asarray(transfer), MatrixKind.SUBUNITARY)


def _repeated_indices(pattern: FockPattern) -> list[int]:
    return [mode for mode, count in enumerate(pattern) for _ in range(count)]


def _check_pair(transfer: TransferMatrix, inp: FockPattern, out: FockPattern) -> None:
    if inp.mode_count != transfer.dimension or out.mode_count != transfer.dimension:
        raise ContractViolation(
            f"Patterns over {inp.mode_count}/{out.mode_count} modes do not fit a "
            f"{transfer.dimension}-mode transfer matrix"
        )
    if inp.total_photons != out.total_photons:
        raise ContractViolation(
            f"Photon numbers differ: {inp.total_photons} in, {out.total_photons} out"
        )


def build_submatrix(
    transfer: "TransferMatrix | ArrayLike", inp: PatternLike, out: PatternLike
) -> np.ndarray:
    """
    N x N matrix whose permanent gives the transition amplitude.

    Column k of the transfer matrix is repeated inp[k] times and row j is
    repeated out[j] times.
    """
    tm = _as_transfer(transfer)
    p_in, p_out = as_pattern(inp), as_pattern(out)
    _check_pair(tm, p_in, p_out)
    rows = _repeated_indices(p_out)
    cols = _repeated_indices(p_in)
    return tm.entries[np.ix_(rows, cols)]


def _factorial_norm(pattern: FockPattern) -> float:
    return float(reduce(lambda acc, n: acc * math.factorial(n), pattern, 1))


def amplitude(transfer: "TransferMatrix | ArrayLike", inp: PatternLike, out: PatternLike) -> complex:
    """<out| U |inp> = perm(U_sub) / sqrt(prod n_i! prod m_j!)."""
    p_in, p_out = as_pattern(inp), as_pattern(out)
    sub = build_submatrix(transfer, p_in, p_out)
    return permanent(sub) / math.sqrt(_factorial_norm(p_in) * _factorial_norm(p_out))


def evolve_state(
    transfer: "TransferMatrix | ArrayLike", state: FockAmplitudeVector
) -> FockAmplitudeVector:
    """
    Apply a (sub)unitary network to a fixed-photon-number state.

    Every output pattern with the same photon number is evaluated with
    `amplitude`; patterns with zero amplitude are dropped.
    """
    tm = _as_transfer(transfer)
    if state.mode_count != tm.dimension:
        raise ContractViolation(
            f"State has {state.mode_count} modes, transfer matrix has {tm.dimension}"
        )
    out: dict[FockPattern, complex] = {}
    by_number: dict[int, list[tuple[FockPattern, complex]]] = {}
    for pattern, amp in state.entries.items():
        by_number.setdefault(pattern.total_photons, []).append((pattern, amp))
    for photons, terms in sorted(by_number.items()):
        for target in enumerate_patterns(tm.dimension, photons):
            value = sum((amp * amplitude(tm, source, target) for source, amp in terms), 0j)
            if abs(value) > 1e-15:
                out[target] = out.get(target, 0j) + value
    return FockAmplitudeVector(tm.dimension, out)
