"""Counting, sampling and verification for uniform hypergraphs with given degrees."""

from ._hyperdeg import (
    CapExceededError,
    DivisibilityError,
    InvariantError,
    PreconditionError,
    RejectionExhaustedError,
    apply_switching,
    asymptotic_count,
    asymptotic_count_regular,
    census,
    classify_partition,
    diagnose_switching,
    estimate_p_simple,
    evaluate_summation,
    exact_ratio,
    loop_cap,
    p_simple_model,
    part_containment_probability,
    partition_space_size,
    ratio_prediction,
    sample_partition,
    sample_simple_hypergraph,
    simple_hypergraph_count,
    verify_double_count,
    verify_identity,
    verify_necessity,
    verify_ratios,
    verify_summation,
)

__all__ = [
    "CapExceededError",
    "DivisibilityError",
    "InvariantError",
    "PreconditionError",
    "RejectionExhaustedError",
    "apply_switching",
    "asymptotic_count",
    "asymptotic_count_regular",
    "census",
    "classify_partition",
    "diagnose_switching",
    "estimate_p_simple",
    "evaluate_summation",
    "exact_ratio",
    "loop_cap",
    "p_simple_model",
    "part_containment_probability",
    "partition_space_size",
    "ratio_prediction",
    "sample_partition",
    "sample_simple_hypergraph",
    "simple_hypergraph_count",
    "verify_double_count",
    "verify_identity",
    "verify_necessity",
    "verify_ratios",
    "verify_summation",
]
