"""Cauchon diagrams, restricted permutations and the minor families of
torus-invariant primes in quantum matrices, with exact-arithmetic oracles."""

from cauchon.grid import (
    BoundError,
    CauchonDiagram,
    GridShape,
    enumerate_diagrams,
    is_valid_diagram,
    step_successor,
    steps,
)
from cauchon.perms import (
    Permutation,
    block_longest,
    bruhat_leq,
    diagram_to_permutation,
    enumerate_restricted,
    in_restricted_set,
    longest_element,
    permutation_to_diagram,
)
from cauchon.minors import (
    MinorFamily,
    MinorIndex,
    enumerate_minors,
    indexset_leq,
    minor_family,
    minor_in_family,
)

__version__ = "0.1.0"
