"""
Fock-space linear algebra: patterns, permanents and transition amplitudes.
"""

from .amplitudes import (
    MatrixKind,
    TransferMatrix,
    amplitude,
    build_submatrix,
    evolve_state,
)
from .patterns import (
    FockAmplitudeVector,
    FockPattern,
    enumerate_patterns,
    iter_patterns,
    pattern_count,
)
from .permanent import naive_permanent, permanent

__all__ = [
    "FockAmplitudeVector",
    "FockPattern",
    "MatrixKind",
    "TransferMatrix",
    "amplitude",
    "build_submatrix",
    "enumerate_patterns",
    "evolve_state",
    "iter_patterns",
    "naive_permanent",
    "pattern_count",
    "permanent",
]
