"""
Layered linear-optical circuits and their transfer matrices.
"""

from .compile import CompiledCircuit, Space, compile_layout, element_matrix
from .elements import CircuitLayout, Element, ElementKind
from .layout_format import format_layout, load_layout, parse_layout, save_layout
from .propagate import beamsplitter_branches, propagate, propagate_extended
from .survival import (
    binomial_loss_law,
    loss_distribution,
    survival_probability,
    survival_probability_extended,
    survival_probability_gram,
    survival_probability_propagated,
)

compile = compile_layout

__all__ = [
    "CircuitLayout",
    "CompiledCircuit",
    "Element",
    "ElementKind",
    "Space",
    "beamsplitter_branches",
    "binomial_loss_law",
    "compile_layout",
    "element_matrix",
    "format_layout",
    "load_layout",
    "loss_distribution",
    "parse_layout",
    "propagate",
    "propagate_extended",
    "save_layout",
    "survival_probability",
    "survival_probability_extended",
    "survival_probability_gram",
    "survival_probability_propagated",
]
