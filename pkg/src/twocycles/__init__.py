"""Exact computation of the module of 2-cycles L(G) of a finite graph.

L(G) is the lattice of integer bilinear forms on oriented edges that vanish
on adjacent edge pairs and whose rows and columns are circulations. The
package builds L(G) exactly, constructs circuit-pair, Kuratowski and quad
2-cycles, and checks generation statements as integer lattice identities.
"""

from .forms import (
    Form2,
    SigmaMode,
    circuit_pair_form,
    elementary_k5_form,
    elementary_k33_form,
    is_two_cycle,
    kuratowski_form,
    quad_form,
    two_cycle_lattice,
)
from .graph import Graph, GraphError, Separation
from .intlattice import SubLattice
from .modules import decompose, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "Form2",
    "Graph",
    "GraphError",
    "Separation",
    "SigmaMode",
    "SubLattice",
    "circuit_pair_form",
    "decompose",
    "elementary_k5_form",
    "elementary_k33_form",
    "is_two_cycle",
    "kuratowski_form",
    "quad_form",
    "two_cycle_lattice",
    "verify_theorem",
]
