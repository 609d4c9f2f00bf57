"""
Hypothesis strategies shared by the circuit and survival tests.
"""

from hypothesis import strategies as st

from src.circuits import CircuitLayout, Element
from src.fock import FockAmplitudeVector, enumerate_patterns


@st.composite
def layouts(draw, modes=4, max_layers=4, with_loss=False):
    layers = []
    for _ in range(draw(st.integers(1, max_layers))):
        order = draw(st.permutations(range(modes)))
        layer = []
        i = 0
        while i < modes:
            kinds = ["bs", "swap", "idle"] + (["loss"] if with_loss else [])
            kind = draw(st.sampled_from(kinds))
            if kind == "loss":
                layer.append(Element.loss(order[i], draw(st.floats(0.1, 1.0))))
                i += 1
            elif kind != "idle" and i + 1 < modes:
                pair = (order[i], order[i + 1])
                layer.append(Element.beamsplitter(*pair) if kind == "bs" else Element.swap(*pair))
                i += 2
            else:
                i += 1
        layers.append(layer)
    return CircuitLayout.build(modes, layers)


def lossy_layouts(min_modes=2, max_modes=6, max_layers=3):
    return st.integers(min_modes, max_modes).flatmap(
        lambda m: layouts(modes=m, max_layers=max_layers, with_loss=True)
    )


@st.composite
def fixed_number_states(draw, modes, max_photons=3):
    """Superpositions of up to three patterns with one photon number."""
    photons = draw(st.integers(1, max_photons))
    patterns = draw(
        st.lists(st.sampled_from(enumerate_patterns(modes, photons)), min_size=1, max_size=3, unique=True)
    )
    coefficients = draw(
        st.lists(
            st.complex_numbers(min_magnitude=0.1, max_magnitude=1.0, allow_nan=False, allow_infinity=False),
            min_size=len(patterns),
            max_size=len(patterns),
        )
    )
    return FockAmplitudeVector.from_terms(zip(patterns, coefficients))
