"""
Fusion-network erasure analysis.
"""

from .erasure import (
    BISECTION_TOLERANCE,
    EncodingMode,
    ErasureAssessment,
    FusionNetwork,
    assess,
    bisect,
    effective_erasure,
    erasure_p0,
    erasure_shor,
    max_correctable_p0,
    max_p_loss,
    min_p_succ,
)

__all__ = [
    "BISECTION_TOLERANCE",
    "EncodingMode",
    "ErasureAssessment",
    "FusionNetwork",
    "assess",
    "bisect",
    "effective_erasure",
    "erasure_p0",
    "erasure_shor",
    "max_correctable_p0",
    "max_p_loss",
    "min_p_succ",
]
