"""
Tests for layouts, compilation and sparse propagation.
"""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from src.circuits import (
    CircuitLayout,
    Element,
    ElementKind,
    Space,
    compile_layout,
    element_matrix,
    propagate,
)
from src.errors import LayoutError
from src.fock import FockAmplitudeVector, evolve_state
from strategies import layouts


class TestLayoutValidation:
    def test_overlapping_elements_rejected(self):
        """Two elements on one mode in the same layer raise the typed layout error."""
        with pytest.raises(LayoutError, match="used by two elements") as info:
            CircuitLayout.build(4, [[Element.beamsplitter(0, 1), Element.swap(1, 2)]])
        assert not isinstance(info.value, ValidationError)

    def test_mode_out_of_range(self):
        """Elements must fit inside the circuit width."""
        with pytest.raises(LayoutError, match="outside circuit width"):
            CircuitLayout.build(2, [[Element.beamsplitter(0, 2)]])

    def test_element_shapes(self):
        """Test invalid element shapes are rejected."""
        with pytest.raises(ValueError):
            Element(kind=ElementKind.BEAMSPLITTER, modes=(1, 1))
        with pytest.raises(ValueError):
            Element(kind=ElementKind.LOSS, modes=(0,))
        with pytest.raises(ValueError):
            Element.loss(0, 1.5)

    def test_summary_counts(self):
        """Summary reports modes, layers and element counts."""
        layout = CircuitLayout.build(
            4,
            [
                [Element.beamsplitter(0, 1), Element.beamsplitter(2, 3)],
                [Element.swap(1, 2), Element.loss(0, 0.9)],
            ],
        )
        assert layout.summary() == {"modes": 4, "layers": 2, "beamsplitters": 2, "swaps": 1, "loss_channels": 1}
        assert layout.without_losses().loss_channels() == 0
        assert layout.without_losses().depth == 2


class TestCompile:
    def test_first_layer_acts_first(self):
        """Layer order is temporal order in the compiled matrix."""
        layout = CircuitLayout.build(3, [[Element.swap(0, 1)], [Element.swap(1, 2)]])
        u = compile_layout(layout).matrix.entries
        # photon in mode 0 -> mode 1 -> mode 2
        assert u[2, 0] == pytest.approx(1.0)

    def test_reduced_loss_is_diagonal(self):
        """A reduced-space loss channel scales one diagonal entry by sqrt(eta)."""
        layout = CircuitLayout.build(2, [[Element.loss(1, 0.64)]])
        u = compile_layout(layout).matrix.entries
        assert np.allclose(u, np.diag([1.0, 0.8]))

    def test_extended_space_width_and_unitarity(self):
        """Each loss channel adds one mode and keeps the matrix unitary."""
        layout = CircuitLayout.build(
            2, [[Element.loss(0, 0.5), Element.loss(1, 0.7)], [Element.beamsplitter(0, 1)]]
        )
        compiled = compile_layout(layout, Space.EXTENDED)
        assert compiled.width == 4
        assert compiled.loss_mode_count == 2
        assert compiled.matrix.is_unitary()

    def test_extended_loss_needs_loss_mode(self):
        """Test extended loss without a target loss mode."""
        with pytest.raises(LayoutError):
            element_matrix(Element.loss(0, 0.5), 2, Space.EXTENDED)

    @given(layouts())
    def test_lossless_layouts_compile_to_unitaries(self, layout):
        """Lossless layouts compile to unitary matrices."""
        assert compile_layout(layout).matrix.is_unitary()

    @given(layouts(with_loss=True))
    def test_lossy_layouts_are_contractions(self, layout):
        """Lossy layouts are contractions; their extended form is unitary."""
        assert compile_layout(layout).matrix.is_contraction()
        assert compile_layout(layout, Space.EXTENDED).matrix.is_unitary()

    @given(layouts(max_layers=2), layouts(max_layers=2))
    def test_concatenation_multiplies(self, first, second):
        """Concatenated layouts compile to the matrix product."""
        joined = CircuitLayout(mode_count=4, layers=first.layers + second.layers)
        expected = compile_layout(second).matrix.entries @ compile_layout(first).matrix.entries
        assert np.allclose(compile_layout(joined).matrix.entries, expected, atol=1e-12)

    @given(layouts(), st.floats(0.05, 1.0))
    def test_uniform_loss_commutes(self, layout, eta):
        """Uniform loss on every mode can move to either end."""
        uniform = [Element.loss(m, eta) for m in range(layout.mode_count)]
        front = CircuitLayout(mode_count=4, layers=(tuple(uniform),) + layout.layers)
        back = CircuitLayout(mode_count=4, layers=layout.layers + (tuple(uniform),))
        assert np.allclose(
            compile_layout(front).matrix.entries, compile_layout(back).matrix.entries, atol=1e-12
        )

    @given(st.sampled_from(["bs", "swap"]), st.permutations(range(4)), st.floats(0.05, 1.0))
    def test_single_channel_commutes_past_untouched_element(self, kind, order, eta):
        """A loss channel on a mode an element does not touch can move across it."""
        a, b, c = order[0], order[1], order[2]
        element = Element.beamsplitter(a, b) if kind == "bs" else Element.swap(a, b)
        channel = Element.loss(c, eta)
        before = CircuitLayout.build(4, [[channel], [element]])
        after = CircuitLayout.build(4, [[element], [channel]])
        assert np.allclose(
            compile_layout(before).matrix.entries, compile_layout(after).matrix.entries, atol=1e-12
        )
        assert np.allclose(
            compile_layout(before, Space.EXTENDED).matrix.entries,
            compile_layout(after, Space.EXTENDED).matrix.entries,
            atol=1e-12,
        )


class TestPropagate:
    @given(layouts(with_loss=True), st.sampled_from([(1, 1, 0, 0), (2, 0, 1, 0), (1, 0, 1, 1)]))
    def test_matches_permanent_evolution(self, layout, pattern):
        """Sparse propagation agrees with permanent-based evolution."""
        state = FockAmplitudeVector.basis(pattern)
        sparse = propagate(layout, state)
        dense = evolve_state(compile_layout(layout).matrix, state)
        assert sparse.close_to(dense, atol=1e-10)

    def test_superposition_input(self):
        """Test propagation of a superposition input."""
        layout = CircuitLayout.build(4, [[Element.beamsplitter(0, 2), Element.beamsplitter(1, 3)]])
        state = FockAmplitudeVector.from_terms([((1, 0, 1, 0), 1.0), ((0, 1, 0, 1), 1.0)])
        out = propagate(layout, state)
        assert out.norm_squared() == pytest.approx(1.0)
        # two-photon interference on both beamsplitters
        assert abs(out.get((1, 0, 1, 0))) < 1e-12
