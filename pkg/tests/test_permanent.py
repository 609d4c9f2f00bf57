"""
Tests for matrix permanents.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.errors import ContractViolation
from src.fock import naive_permanent, permanent


def test_empty_matrix_has_unit_permanent():
    """The empty permanent is one."""
    assert permanent(np.zeros((0, 0))) == 1


def test_single_entry():
    """Test a 1x1 permanent."""
    assert permanent([[3.5 - 1j]]) == pytest.approx(3.5 - 1j)


def test_two_by_two():
    """Test the 2x2 permanent ad + bc."""
    a, b, c, d = 1.0, 2.0, 3.0, 4.0
    assert permanent([[a, b], [c, d]]) == pytest.approx(a * d + b * c)


@pytest.mark.parametrize("n", range(1, 8))
def test_all_ones_is_factorial(n):
    """The all-ones matrix has permanent n!."""
    assert permanent(np.ones((n, n))) == pytest.approx(math.factorial(n))


def test_identity_and_permutation_matrices():
    """Permutation matrices have unit permanent."""
    assert permanent(np.eye(5)) == pytest.approx(1.0)
    perm = np.eye(4)[[2, 0, 3, 1]]
    assert permanent(perm) == pytest.approx(1.0)


def test_hadamard_block_has_zero_permanent():
    """The 2x2 Hadamard permanent vanishes."""
    h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    assert abs(permanent(h)) < 1e-15


def test_non_square_is_rejected():
    """Test non-square input is rejected."""
    with pytest.raises(ContractViolation):
        permanent(np.ones((2, 3)))
    with pytest.raises(ValueError):
        naive_permanent(np.ones(4))


def _complex_matrices(n):
    parts = arrays(np.float64, (n, n), elements=st.floats(-2, 2, allow_nan=False))
    return st.tuples(parts, parts).map(lambda ri: ri[0] + 1j * ri[1])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(_complex_matrices))
def test_matches_permutation_sum(matrix):
    """Ryser agrees with the explicit sum over permutations."""
    assert permanent(matrix) == pytest.approx(naive_permanent(matrix), abs=1e-9, rel=1e-9)


@given(st.integers(2, 5).flatmap(_complex_matrices), st.data())
def test_invariant_under_row_and_column_permutations(matrix, data):
    """Shuffling rows and columns leaves the permanent unchanged."""
    n = matrix.shape[0]
    rows = data.draw(st.permutations(range(n)))
    cols = data.draw(st.permutations(range(n)))
    shuffled = matrix[np.ix_(rows, cols)]
    assert permanent(shuffled) == pytest.approx(permanent(matrix), abs=1e-9, rel=1e-9)
