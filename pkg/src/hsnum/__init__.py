"""Exact Hurwitz numbers h_{g,1^d} and Hurwitz-Severi numbers of plane curves."""
from .hurwitz import (
    CapExceeded, InternalInexact, MethodDisagreement, TupleCount,
    brute_force_count, connected_count, cut_and_join_walk, disconnected_count,
    hurwitz_number, hurwitz_simple, pair_count,
)
from .severi import (
    Classification, DegenerateProjection, EmptyVariety, HSValue, Kind, SeveriTriple,
    UnbendableUnsupported, classify, dims, hs_number, is_nonempty, node_count,
)

__version__ = "0.1.0"
