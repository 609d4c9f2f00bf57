"""
Tests for transfer matrices and multi-photon amplitudes.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import unitary_group

from src.errors import ContractViolation
from src.fock import (
    FockAmplitudeVector,
    TransferMatrix,
    amplitude,
    build_submatrix,
    enumerate_patterns,
    evolve_state,
)

BS = np.array([[1, 1], [1, -1]]) / np.sqrt(2)


class TestHongOuMandel:
    def test_coincidence_vanishes(self):
        """Two photons on a balanced beamsplitter never leave in different ports."""
        assert abs(amplitude(BS, (1, 1), (1, 1))) < 1e-12

    def test_bunched_outcomes_share_probability(self):
        """Test the bunched outputs split the probability evenly."""
        out = evolve_state(BS, FockAmplitudeVector.basis((1, 1)))
        assert abs(out.get((2, 0))) ** 2 == pytest.approx(0.5, abs=1e-12)
        assert abs(out.get((0, 2))) ** 2 == pytest.approx(0.5, abs=1e-12)
        assert abs(out.get((1, 1))) < 1e-12

    def test_single_photon_splits_evenly(self):
        """A single photon leaves either port with amplitude 1/sqrt(2), signed by input port."""
        out = evolve_state(BS, FockAmplitudeVector.basis((1, 0)))
        assert out.get((1, 0)) == pytest.approx(1 / math.sqrt(2))
        assert out.get((0, 1)) == pytest.approx(1 / math.sqrt(2))
        out = evolve_state(BS, FockAmplitudeVector.basis((0, 1)))
        assert out.get((1, 0)) == pytest.approx(1 / math.sqrt(2))
        assert out.get((0, 1)) == pytest.approx(-1 / math.sqrt(2))


class TestTransferMatrix:
    def test_unitary_check(self):
        """Test unitary construction rejects non-unitary matrices."""
        assert TransferMatrix.unitary(BS).is_unitary()
        with pytest.raises(ContractViolation):
            TransferMatrix.unitary(np.array([[1.0, 1.0], [0.0, 1.0]]))

    def test_subunitary_check(self):
        """Test contraction check on lossy matrices."""
        assert TransferMatrix.subunitary(0.9 * BS).is_contraction()
        with pytest.raises(ContractViolation):
            TransferMatrix.subunitary(1.1 * np.eye(2))

    def test_non_square_rejected(self):
        """Transfer matrices must be square."""
        with pytest.raises(ContractViolation):
            TransferMatrix(np.ones((2, 3)))

    def test_entries_are_read_only(self):
        """Transfer matrix entries cannot be mutated in place."""
        tm = TransferMatrix.identity(3)
        with pytest.raises(ValueError):
            tm.entries[0, 0] = 2.0

    def test_composition_kind(self):
        """Composition keeps unitary only when both factors are unitary."""
        u = TransferMatrix.unitary(BS)
        s = TransferMatrix.subunitary(0.5 * np.eye(2))
        assert (u @ u).is_unitary()
        assert (u @ s).kind.value == "subunitary"


class TestSubmatrix:
    def test_repeats_rows_and_columns(self):
        """Submatrix repeats columns by input and rows by output occupation."""
        u = np.arange(9).reshape(3, 3)
        sub = build_submatrix(u, (2, 0, 1), (0, 1, 2))
        assert sub.shape == (3, 3)
        assert sub[0].tolist() == [3, 3, 5]
        assert sub[2].tolist() == [6, 6, 8]

    def test_photon_number_mismatch(self):
        """Test differing photon numbers are rejected."""
        with pytest.raises(ContractViolation):
            build_submatrix(np.eye(2), (1, 0), (1, 1))

    def test_mode_count_mismatch(self):
        """Test patterns wider than the matrix are rejected."""
        with pytest.raises(ContractViolation):
            amplitude(np.eye(2), (1, 0, 0), (1, 0, 0))


@given(st.integers(2, 4), st.integers(1, 3), st.integers(0, 2**31 - 1))
def test_unitary_evolution_preserves_norm(modes, photons, seed):
    """Random unitaries keep a superposition normalized."""
    u = unitary_group.rvs(modes, random_state=seed)
    inputs = enumerate_patterns(modes, photons)
    state = FockAmplitudeVector.from_terms([(inputs[0], 1.0), (inputs[-1], 0.5j)])
    assert evolve_state(u, state).norm_squared() == pytest.approx(1.0, abs=1e-9)


def test_evolution_composes():
    """Evolving twice equals evolving by the matrix product."""
    rng = np.random.default_rng(7)
    u = unitary_group.rvs(4, random_state=rng)
    v = unitary_group.rvs(4, random_state=rng)
    state = FockAmplitudeVector.from_terms([((1, 1, 0, 0), 1.0), ((0, 0, 2, 0), 1.0)])
    stepwise = evolve_state(v, evolve_state(u, state))
    direct = evolve_state(v @ u, state)
    assert stepwise.close_to(direct, atol=1e-10)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 6), st.integers(1, 4), st.integers(0, 2**31 - 1), st.data())
def test_every_input_pattern_keeps_unit_norm(modes, photons, seed, data):
    """Output probabilities of a single input pattern sum to one under a unitary."""
    u = unitary_group.rvs(modes, random_state=seed)
    pattern = data.draw(st.sampled_from(enumerate_patterns(modes, photons)))
    out = evolve_state(u, FockAmplitudeVector.basis(pattern))
    assert sum(out.probabilities().values()) == pytest.approx(1.0, abs=1e-9)


@given(st.integers(2, 5), st.integers(0, 2**31 - 1), st.data())
def test_amplitude_is_symmetric_under_mode_relabelling(modes, seed, data):
    """Relabelling modes of the matrix and both patterns together leaves amplitudes unchanged."""
    u = unitary_group.rvs(modes, random_state=seed)
    photons = data.draw(st.integers(1, 3))
    patterns = enumerate_patterns(modes, photons)
    inp = data.draw(st.sampled_from(patterns))
    out = data.draw(st.sampled_from(patterns))
    relabel = np.array(data.draw(st.permutations(range(modes))))
    inverse = np.argsort(relabel)
    # mode k of the original circuit becomes mode relabel[k]
    permuted = u[np.ix_(inverse, inverse)]
    moved_in = tuple(inp[int(i)] for i in inverse)
    moved_out = tuple(out[int(i)] for i in inverse)
    assert amplitude(permuted, moved_in, moved_out) == pytest.approx(amplitude(u, inp, out), abs=1e-10)


@pytest.mark.parametrize("modes,photons", [(2, 4), (4, 3), (6, 4)])
def test_all_input_patterns_keep_unit_norm(modes, photons):
    """Every input pattern of a random unitary evolves to a normalized state."""
    u = unitary_group.rvs(modes, random_state=modes * 10 + photons)
    for pattern in enumerate_patterns(modes, photons):
        out = evolve_state(u, FockAmplitudeVector.basis(pattern))
        assert out.norm_squared() == pytest.approx(1.0, abs=1e-9)
