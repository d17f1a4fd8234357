"""Rotational flows of two-dimensional algebras.

Indices are 0-based. Tensors are numpy arrays of shape (m, m, m) indexed
[i, j, k]; 2x4 structure matrices have shape (2, 4).
"""

from ._core import (
    SearchConfig,
    VerdictKind,
    associativity_residual,
    change_of_basis,
    classify_time,
    commutativity_defect,
    flow_tensor,
    from_2x4,
    invariant_signature,
    is_associative,
    is_commutative,
    iso_residual,
    iso_search,
    mul_type_c,
    rotation_iso,
    to_2x4,
    to_bekbaev,
    verify_kce,
)

__all__ = [
    "SearchConfig",
    "VerdictKind",
    "associativity_residual",
    "change_of_basis",
    "classify_time",
    "commutativity_defect",
    "flow_tensor",
    "from_2x4",
    "invariant_signature",
    "is_associative",
    "is_commutative",
    "iso_residual",
    "iso_search",
    "mul_type_c",
    "rotation_iso",
    "to_2x4",
    "to_bekbaev",
    "verify_kce",
]
