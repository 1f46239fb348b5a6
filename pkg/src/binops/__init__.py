"""Invertible binary operations on finite sets.

Binary operations ``f(t, x)`` compose slice-wise, ``(f o g)(t, x) =
f(t, g(t, x))``; the invertible ones form a group of order ``(n!)**n``
isomorphic to the maps from the points into ``S_n``.  The package also
checks distributivity and builds the binary Cayley representation
``i_g(h1, h2) = h1 g h1^-1 h2`` of a finite group.
"""

from .catalog import (
    alternating_group,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    direct_product,
    klein_group,
    quaternion_group,
    small_groups,
)
from .core import (
    BinaryOpTable,
    EndoMap,
    Permutation,
    PointSet,
    all_permutations,
    brute_force_inverse,
    compose,
    embed_unary,
    from_slices,
    identity_op,
    invert,
    is_invertible,
    make_binop,
    slice_at,
    slices,
)
from .distributive import (
    RepresentationReport,
    binary_representation,
    distributivity_witness,
    is_distributive_pair,
    is_distributive_subgroup,
    slice_relation_holds,
    slice_relation_witness,
    verify_representation,
)
from .enumeration import CensusResult, criterion_census, enumerate_all_ops, enumerate_invertible
from .groups import (
    FiniteGroup,
    FunctionFamily,
    are_isomorphic,
    closure,
    function_families,
    function_family_group,
    group_from_elements,
    group_of_ops,
    h2_order,
    identify_group,
    iso_p,
    iso_p_inv,
    relabel,
    symmetric_group,
    validate_group,
)
from .textio import (
    Document,
    load_fixture,
    parse_binop,
    parse_group,
    read_document,
    serialize_binop,
    serialize_group,
    write_document,
)
