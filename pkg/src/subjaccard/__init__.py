"""Submodular generalizations of the Jaccard distance, with exhaustive and
sampled verification of their inequalities."""

from .errors import (
    CapExceeded,
    GroundMismatch,
    LengthMismatch,
    MalformedSpec,
    ModeMismatch,
    NegativeEntry,
    PrereqFailed,
    PropertyViolation,
    UnknownLabel,
)
from .jaccard import (
    WeightedVector,
    jaccard_distance,
    jaccard_index,
    multiset_jaccard_distance,
    steinhaus_distance,
    sub_jaccard_cap,
    sub_jaccard_delta,
    sub_jaccard_index,
    vector_jaccard_distance,
)
from .report import PropertyReport, Verdict, ViolationRecord
from .setcore import (
    GroundSet,
    SubsetMask,
    complement,
    enumerate_subsets,
    intersection,
    is_comparable,
    is_subset,
    sym_difference,
    union,
)
from .setfun import (
    SetFunctionSpec,
    bipartite_neighborhood,
    budgeted_linear,
    cardinality,
    evaluate,
    explicit_table,
    is_modular,
    is_monotone,
    is_nonnegative,
    is_submodular_marginal,
    is_submodular_pairwise,
    joint_entropy,
    materialize,
    partition_matroid_rank,
    random_monotone_function,
    uniform_matroid_rank,
    weighted_modular,
)
from .verify import (
    check_corollary1,
    check_lemma1,
    check_metric_axioms,
    check_ordering,
    check_triangle,
    find_cap_counterexample,
    sampled_check,
)

__version__ = "0.1.0"
