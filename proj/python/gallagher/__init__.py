"""Exact measure computations on the circle R/Z.

Rationals are passed as ``fractions.Fraction``, ``int`` or ``"p/q"``
strings and returned as ``Fraction``. Circle points are rationals reduced
into [0, 1).
"""

from ._core import (
    ArcSet,
    DeltaSequence,
    IndexPredicate,
    add_order_of,
    approx_order_set,
    ball,
    ball_measure,
    cassels,
    density_profile,
    density_ratio,
    dist_to_order_n,
    duffin_schaeffer,
    gallagher,
    gallagher_decomposition,
    invariant_set_search,
    is_prime,
    membership_witnesses,
    norm,
    preimage,
    radical,
    subadditive_bound,
    tail_union,
    to_decimal,
    totient,
    witnesses,
)

__all__ = [
    "ArcSet",
    "DeltaSequence",
    "IndexPredicate",
    "add_order_of",
    "approx_order_set",
    "ball",
    "ball_measure",
    "cassels",
    "density_profile",
    "density_ratio",
    "dist_to_order_n",
    "duffin_schaeffer",
    "gallagher",
    "gallagher_decomposition",
    "invariant_set_search",
    "is_prime",
    "membership_witnesses",
    "norm",
    "preimage",
    "radical",
    "subadditive_bound",
    "tail_union",
    "to_decimal",
    "totient",
    "witnesses",
]
