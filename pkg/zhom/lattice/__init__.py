from .groups import (
    Coset,
    GroupBasis,
    NotACoset,
    PrimePart,
    basis_decomposition,
    coset_detect,
    coset_prime_split,
    element_order,
    prime_blocks,
    project,
    reassemble,
    span,
    vadd,
    vscale,
    vsub,
    vzero,
)
from .integer import (
    GeneratingSet,
    IntLattice,
    echelon,
    generating_set,
    left_kernel,
    quotient_basis,
    relation_lattice,
    saturate,
)
from .uniform import UniformMap, uniform_map

__all__ = [
    "IntLattice",
    "GeneratingSet",
    "echelon",
    "left_kernel",
    "relation_lattice",
    "saturate",
    "quotient_basis",
    "generating_set",
    "Coset",
    "NotACoset",
    "GroupBasis",
    "PrimePart",
    "basis_decomposition",
    "coset_detect",
    "coset_prime_split",
    "prime_blocks",
    "project",
    "reassemble",
    "span",
    "element_order",
    "vadd",
    "vsub",
    "vscale",
    "vzero",
    "UniformMap",
    "uniform_map",
]
