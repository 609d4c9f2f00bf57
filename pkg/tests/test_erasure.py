"""
Tests for fusion erasure probabilities and network correctability.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.errors import ContractViolation
from src.fbqc import (
    EncodingMode,
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

SIX, FOUR = FusionNetwork.SIX_RING, FusionNetwork.FOUR_STAR
BARE, SHOR = EncodingMode.BARE, EncodingMode.SHOR_2_2

probabilities = st.floats(0.0, 1.0)


class TestSingleOutcomeErasure:
    def test_examples(self):
        """Test single-outcome erasure at known points."""
        assert erasure_p0(0.5, 0.0) == pytest.approx(0.25)
        assert erasure_p0(1.0, 0.0) == pytest.approx(0.0)
        assert erasure_p0(0.75, 0.0) == pytest.approx(0.125)
        assert erasure_p0(0.3, 1.0) == pytest.approx(1.0)
        assert erasure_p0(0.75, 0.103704) == pytest.approx(0.215741, abs=1e-6)

    @given(probabilities, probabilities)
    def test_range(self, p_succ, p_loss):
        """Erasure stays a probability."""
        assert 0.0 <= erasure_p0(p_succ, p_loss) <= 1.0

    def test_out_of_range(self):
        """Test inputs outside [0, 1] are rejected."""
        with pytest.raises(ContractViolation):
            erasure_p0(1.2, 0.0)
        with pytest.raises(ContractViolation):
            erasure_p0(0.5, -0.1)
        with pytest.raises(ContractViolation):
            erasure_shor(1.5)

    @given(probabilities, probabilities, st.floats(0.0, 0.1))
    def test_monotone(self, p_succ, p_loss, step):
        """Erasure grows with loss and shrinks with success probability."""
        base = erasure_p0(p_succ, p_loss)
        assert erasure_p0(max(0.0, p_succ - step), p_loss) >= base - 1e-12
        assert erasure_p0(p_succ, min(1.0, p_loss + step)) >= base - 1e-12


class TestShorEncoding:
    def test_fixed_points(self):
        """Test Shor erasure fixed points at 0, 1/2 and 1."""
        assert erasure_shor(0.0) == 0.0
        assert erasure_shor(1.0) == pytest.approx(1.0)
        assert erasure_shor(0.5) == pytest.approx(0.5)

    def test_suppresses_small_erasure(self):
        """Encoding lowers small erasure rates."""
        assert erasure_shor(0.125) == pytest.approx(0.0429688, abs=1e-6)
        for p in (0.01, 0.1, 0.3, 0.45):
            assert erasure_shor(p) < p

    def test_amplifies_large_erasure(self):
        """Encoding raises large erasure rates."""
        for p in (0.55, 0.7, 0.9):
            assert erasure_shor(p) > p

    @given(st.floats(0.0, 0.99), st.floats(0.0, 0.01))
    def test_monotone(self, p, step):
        """Shor erasure is increasing."""
        assert erasure_shor(p + step) >= erasure_shor(p) - 1e-12

    def test_effective_erasure(self):
        """Test encoding selects the erasure formula."""
        assert effective_erasure(0.2, BARE) == 0.2
        assert effective_erasure(0.2, SHOR) == erasure_shor(0.2)


class TestNetworkRequirements:
    @pytest.mark.parametrize(
        "network,encoding,expected",
        [
            (SIX, BARE, 0.7604),
            (SIX, SHOR, 0.568025),
            (FOUR, BARE, 0.862),
            (FOUR, SHOR, 0.67903),
        ],
    )
    def test_min_p_succ(self, network, encoding, expected):
        """Test lossless success requirements per network and encoding."""
        assert min_p_succ(network, encoding) == pytest.approx(expected, abs=1e-4)

    def test_shor_bound_sits_on_threshold(self):
        """The largest encodable erasure maps onto the network threshold."""
        p0 = max_correctable_p0(SIX, SHOR)
        assert erasure_shor(p0) == pytest.approx(SIX.threshold_p_er, abs=1e-5)

    def test_max_p_loss(self):
        """Test loss budget for a given success probability."""
        assert max_p_loss(0.75, SIX, SHOR) == pytest.approx(0.103986, abs=1e-5)
        assert max_p_loss(0.5, SIX, SHOR) is None
        assert max_p_loss(0.75, SIX, BARE) is None
        four = max_p_loss(0.75, FOUR, SHOR)
        assert four is not None and four < max_p_loss(0.75, SIX, SHOR)

    @given(st.floats(0.87, 1.0), st.sampled_from(list(FusionNetwork)))
    def test_shor_budget_exceeds_bare(self, p_succ, network):
        """Above both lossless minima the encoded budget is strictly larger."""
        bare = max_p_loss(p_succ, network, BARE)
        shor = max_p_loss(p_succ, network, SHOR)
        assert bare is not None and shor is not None
        assert shor > bare

    def test_regular_bsm_is_never_correctable(self):
        """The regular BSM fails every network even without loss."""
        for network in FusionNetwork:
            for encoding in EncodingMode:
                assert not assess(0.5, 0.0, network, encoding).correctable


class TestAssess:
    def test_boosted_lossless(self):
        """Test assessment of the lossless Phi+ boosted scheme."""
        result = assess(0.75, 0.0, SIX, SHOR)
        assert result.p_0 == pytest.approx(0.125)
        assert result.p_enc == pytest.approx(0.0429688, abs=1e-6)
        assert result.effective_erasure == result.p_enc
        assert result.correctable

    def test_bare_has_no_encoded_erasure(self):
        """Bare assessments carry no encoded erasure."""
        result = assess(0.75, 0.0, SIX, BARE)
        assert result.p_enc is None
        assert result.effective_erasure == pytest.approx(0.125)
        assert result.correctable is False

    def test_threshold_is_strict(self):
        """Erasure exactly at the threshold is not correctable."""
        # p_succ = 1 - 2 * threshold gives p_0 exactly at the threshold
        p_succ = 1.0 - 2.0 * SIX.threshold_p_er
        assert erasure_p0(p_succ, 0.0) == pytest.approx(SIX.threshold_p_er)
        assert not assess(p_succ - 1e-9, 0.0, SIX, BARE).correctable

    def test_serializes(self):
        """Test assessments serialize to JSON."""
        payload = assess(0.75, 0.05, FOUR, SHOR).model_dump(mode="json")
        assert payload["network"] == "four_star"
        assert payload["encoding"] == "shor_2_2"


class TestBisect:
    def test_finds_boundary(self):
        """Test bisection on a known step."""
        assert bisect(lambda x: x < 0.3, 0.0, 1.0, 1e-8) == pytest.approx(0.3, abs=1e-7)

    def test_requires_sign_change(self):
        """Bisection needs the predicate to switch on the interval."""
        with pytest.raises(ContractViolation):
            bisect(lambda x: True, 0.0, 1.0)
