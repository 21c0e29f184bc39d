"""Exact Clifford algebras, their finite groups, gamma matrices and CPT groups."""

from .automorphisms import (
    EXT_KEYS,
    ExtGroup,
    GeneratingGroup,
    SignedTable,
    derive_ext_group,
    ext_matrix_oracle,
    full_cpt_group,
    generating_group_from_ptc,
    solve_complex_conjugation,
    solve_transpose_symmetry,
    star_matrix,
)
from .blades import (
    AlgebraSignature,
    SignedBlade,
    blade_product,
    center_type,
    conjugation,
    grade_involution,
    pseudo_conjugation,
    reversion,
    volume_square,
)
from .claims import Report, run_all_checks
from .fixtures import FIXTURE_NAMES, fixture_basis
from .groups import (
    GroupTable,
    OrderStructure,
    SalingarosLabel,
    center,
    central_product,
    classify_salingaros,
    even_subgroup,
    find_isomorphism,
    generate_group,
    is_embedding,
    is_isomorphic,
    order_structure,
    standard_group,
)
from .matrices import (
    GammaBasis,
    GaussianMatrix,
    brauer_weyl_basis,
    kron,
    pauli,
    rep_of_blade,
    schur_scalar,
    verify_intertwiner,
)

is_subgroup_of = is_embedding

__all__ = [
    "AlgebraSignature", "SignedBlade", "blade_product", "grade_involution", "reversion",
    "conjugation", "pseudo_conjugation", "volume_square", "center_type",
    "GroupTable", "OrderStructure", "SalingarosLabel", "generate_group", "order_structure",
    "center", "classify_salingaros", "standard_group", "central_product", "find_isomorphism",
    "is_isomorphic", "even_subgroup", "is_embedding", "is_subgroup_of",
    "GaussianMatrix", "GammaBasis", "pauli", "kron", "brauer_weyl_basis", "rep_of_blade",
    "schur_scalar", "verify_intertwiner", "FIXTURE_NAMES", "fixture_basis",
    "EXT_KEYS", "ExtGroup", "SignedTable", "GeneratingGroup", "star_matrix",
    "solve_transpose_symmetry", "solve_complex_conjugation", "derive_ext_group",
    "ext_matrix_oracle", "generating_group_from_ptc", "full_cpt_group",
    "Report", "run_all_checks",
]
