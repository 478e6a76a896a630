"""Finite and locally finite distributive lattices and their order-ideal representation."""
from .errors import *  # noqa: F401,F403
from .kernels import BACKEND
from .lattice import (
    FiniteLattice,
    interval,
    irredundant_join_decomposition,
    is_distributive,
    is_join_prime,
    join_irreducibles,
    try_lattice,
)
from .laws import (
    ChainReport,
    check_bottom,
    check_local_finiteness,
    longest_chain,
    partial_join_chain,
    sample_antichains,
)
from .lazy import (
    FiniteIdeal,
    IdealLattice,
    LazyPoset,
    enumerate_finite_ideals,
    from_finite,
    ideal_additions,
    join_ideals,
    meet_ideals,
    quadrant_poset,
    shifted_octant_poset,
)
from .poset import (
    FinitePoset,
    OrderIdeal,
    enumerate_order_ideals,
    from_cover_relation,
    is_antichain,
    is_order_ideal,
    principal_ideal,
    transitive_reduction,
)
from .representation import (
    RepresentationReport,
    eta,
    ideal_lattice,
    reconstruct,
    theta,
    verify_representation,
)

__version__ = "0.1.0"
