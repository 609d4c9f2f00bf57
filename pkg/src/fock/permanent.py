"""
Matrix permanents.

`permanent` is Ryser's inclusion-exclusion formula walked in Gray-code order,
so each step updates the running row sums with a single column. `naive_permanent`
sums over all permutations and is kept as a test oracle for small matrices.
"""

import itertools
import math

import numpy as np
from numpy.typing import ArrayLike

from ..errors import ContractViolation


def _as_square(matrix: ArrayLike) -> np.ndarray:
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolation(f"Permanent needs a square matrix, got shape {a.shape}")
    return a


def permanent(matrix: ArrayLike) -> complex:
    """
    Permanent of a square matrix in O(2^n * n).

    Args:
        matrix: n x n array-like, n >= 0

    Returns:
        The permanent; 1 for the empty matrix

    Raises:
        ContractViolation: If the input is not square
    """
    a = _as_square(matrix)
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0j
    if n == 1:
        return complex(a[0, 0])

    row_sums = np.zeros(n, dtype=complex)
    total = 0j
    previous = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        flipped = gray ^ previous
        column = flipped.bit_length() - 1
        if gray & flipped:
            row_sums += a[:, column]
        else:
            row_sums -= a[:, column]
        previous = gray
        # popcount(gray) has the parity of k
        term = np.prod(row_sums)
        total += -term if k & 1 else term
    return complex(total if n % 2 == 0 else -total)


def naive_permanent(matrix: ArrayLike) -> complex:
    """Permanent by direct permutation sum. Only sensible for n <= 8."""
    a = _as_square(matrix)
    n = a.shape[0]
    total = 0j
    for sigma in itertools.permutations(range(n)):
        total += math.prod((a[i, sigma[i]] for i in range(n)), start=1 + 0j)
    return complex(total)
