"""Exact computations with induced exceptional collections.

Thin re-export of the compiled extension.  Graded dimension vectors cross the
boundary as ``{degree: multiplicity}`` dicts and induced labels as
``(alpha, irrep)`` tuples.
"""

from ._core import (
    classify_functor,
    enumerate_labels,
    equivariant_ext,
    mn_character,
    partition_count,
    partitions,
    rank_fr,
    rank_twist,
    sequence_length,
    sym_power,
    tensor,
    twist_group_rank,
    validate_collection,
    verify_sequence,
)

__all__ = [
    "classify_functor",
    "enumerate_labels",
    "equivariant_ext",
    "mn_character",
    "partition_count",
    "partitions",
    "rank_fr",
    "rank_twist",
    "sequence_length",
    "sym_power",
    "tensor",
    "twist_group_rank",
    "validate_collection",
    "verify_sequence",
]
