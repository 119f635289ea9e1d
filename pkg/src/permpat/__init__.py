"""Permutation pattern / permutation group engine.

Public surface: permutation values and their pattern calculus (``perms``),
set partitions and the derivative calculus (``partitions``), fully
enumerated permutation groups (``groups``), the pattern/compatibility
operators (``galois``), the closed-form level classifier (``classify``),
and the brute-force verifier (``verify``).
"""
from .perms import (
    CapExceeded,
    JumpPair,
    Perm,
    adjacent_pattern_quotient,
    ajd,
    all_patterns,
    ascending,
    complement,
    compose,
    delete_point,
    descending,
    direct_sum,
    dja,
    format_perm,
    inverse,
    involves,
    is_even,
    jumps,
    natural_cycle,
    parity,
    parse_perm,
    pattern,
    power,
    reduce_word,
    reverse,
    rc_conjugate,
    skew_sum,
)
from .partitions import (
    Partition,
    delta_pairs,
    derive,
    derive_iter,
    end_blocks,
    format_partition,
    interwoven,
    interwoven_ends,
    interwoven_generators,
    join,
    max_intervals,
    meet,
    mu,
    mu_ab,
    odd_even,
    parse_partition,
    refines,
    reverse_partition,
)
from .groups import (
    PermGroup,
    alternating_group,
    descending_group,
    describe_group,
    dihedral_interval_group,
    enumerate_subgroups,
    natural_cyclic_group,
    natural_dihedral_group,
    parse_group,
    partition_automorphisms,
    sab_group,
    symmetric_group,
    trivial_group,
    young_subgroup,
    young_with_reversal,
)
from .galois import PermSet, comp_level_sequence, comp_set, gcomp, gpat, pat_set
from .classify import (
    ClassKind,
    EventualFamily,
    Prediction,
    classify_kind,
    predict_eventual,
    predict_level,
    predict_next,
)
from .verify import (
    Report,
    eventual_onset,
    verify_catalog,
    verify_group,
    verify_laws,
    verify_prediction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
