"""Chain groups of labeled forests.

The chain group of a forest on ``1..n`` is the subgroup of S_n generated by
one cycle per maximal path.  See README.md for the command-line interface.
"""

__version__ = "0.1.0"

from .classify import (  # noqa: E402
    GroupClass,
    abelian_invariants,
    chain_group,
    contains_full_cycle,
    identify,
    is_dihedral,
    max_abelian_order,
)
from .forest import (  # noqa: E402
    FamilySpec,
    Forest,
    components,
    degree_profile,
    disjoint_union,
    is_extended_subforest,
    make_family,
    maximal_paths,
    parse_forest,
    relabel,
)
from .perm import PermGroup, Permutation, compose, generate_group, perm_from_cycles  # noqa: E402

__all__ = [
    "FamilySpec", "Forest", "GroupClass", "PermGroup", "Permutation",
    "abelian_invariants", "chain_group", "components", "compose", "contains_full_cycle",
    "degree_profile", "disjoint_union", "generate_group", "identify", "is_dihedral",
    "is_extended_subforest", "make_family", "max_abelian_order", "maximal_paths",
    "parse_forest", "perm_from_cycles", "relabel",
]
