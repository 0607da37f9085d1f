"""Exact sl2 Kostka polynomials, level restriction, and character identities.

Everything is exact: big integers, rationals for fractional exponents,
no floating point anywhere. The same quantities are computed by several
independent routes (quasi-particle sums, tableau statistics, Weyl-orbit
alternating sums, functional models, theta quotients) and the test suite
holds the routes against each other.
"""

__version__ = "0.1.0"

from .abf import AbfLabel, abf_polynomial, finitization_audit, grouped_identity_check, inversion_check
from .charge import charge, enumerate_ssyt, kostka_foulkes, kostka_sl2_oracle, reading_word
from .coinvariants import (
    FunctionalModelSpec,
    OracleScaleExceeded,
    build_constraint_matrix,
    restricted_kostka_oracle,
)
from .compositions import (
    Composition,
    InvalidWeightError,
    ShapeContent,
    bridge_to_partition,
    composition_from_factors,
    min_form,
    norm_ss,
    parity_count,
    parse_factor_list,
    top_degree_h,
    weighted_size,
)
from .kostka import (
    alternating_sum_raw,
    fusion_char_hook,
    fusion_weight_char,
    restricted_alternating,
    restricted_fermionic,
    restriction_vector,
    reversed_char_1N,
    reversed_restricted,
    unrestricted,
)
from .qexact import (
    QPolynomial,
    QSeriesTruncated,
    bounded_partition_series,
    finite_pochhammer,
    gaussian_binomial,
    partition_series,
    substitute_inverse,
    vector_gaussian_binomial,
)
from .reports import AuditRecord
from .verlinde import fuse_basic, q1_consistency, structure_constants
from .virasoro import (
    BranchingSeries,
    LimitTermData,
    MinimalModel,
    branching_via_kostka_limit,
    conformal_weight,
    coset_central_charge,
    fermionic_character_sum,
    fermionic_term_limit,
    rocha_caridi,
    series_mismatches,
    stabilization_order,
)
from .weyl import (
    AffineWeight,
    bgg_generators,
    closed_form_action,
    euler_characteristic_bgg,
    homology_dim_predicate,
    shifted_reflection,
)

__all__ = [
    "AbfLabel",
    "AffineWeight",
    "AuditRecord",
    "BranchingSeries",
    "Composition",
    "FunctionalModelSpec",
    "InvalidWeightError",
    "LimitTermData",
    "MinimalModel",
    "OracleScaleExceeded",
    "QPolynomial",
    "QSeriesTruncated",
    "ShapeContent",
    "__version__",
    "abf_polynomial",
    "alternating_sum_raw",
    "bgg_generators",
    "bounded_partition_series",
    "branching_via_kostka_limit",
    "bridge_to_partition",
    "build_constraint_matrix",
    "charge",
    "closed_form_action",
    "composition_from_factors",
    "conformal_weight",
    "coset_central_charge",
    "enumerate_ssyt",
    "euler_characteristic_bgg",
    "fermionic_character_sum",
    "fermionic_term_limit",
    "finite_pochhammer",
    "finitization_audit",
    "fuse_basic",
    "fusion_char_hook",
    "fusion_weight_char",
    "gaussian_binomial",
    "grouped_identity_check",
    "homology_dim_predicate",
    "inversion_check",
    "kostka_foulkes",
    "kostka_sl2_oracle",
    "min_form",
    "norm_ss",
    "parity_count",
    "parse_factor_list",
    "partition_series",
    "q1_consistency",
    "reading_word",
    "restricted_alternating",
    "restricted_fermionic",
    "restricted_kostka_oracle",
    "restriction_vector",
    "reversed_char_1N",
    "reversed_restricted",
    "rocha_caridi",
    "series_mismatches",
    "shifted_reflection",
    "stabilization_order",
    "structure_constants",
    "substitute_inverse",
    "top_degree_h",
    "unrestricted",
    "vector_gaussian_binomial",
    "weighted_size",
]
