"""Exact engine for generalized Eulerian numbers via rook placements.

Counts placements of cap rooks per row and column of a square board by the
number of rooks below the main diagonal, synthesizes the matching rational
generating functions with a transfer-matrix construction over excess
partitions, and maps placements to and from multiplex siteswap patterns.
Every result path is cross-validated against an independent oracle.
"""

__version__ = "0.1.0"

from .algebra import (
    PolyMatrix,
    Polynomial,
    RationalFunction,
    RationalMatrix,
    geometric_sum,
    poly_gcd,
    poly_text,
    ratfun_equal,
)
from .generic_gf import (
    GenericPlacement,
    OracleComparison,
    TransitionMatrix,
    coefficients_vs_oracle,
    enumerate_generic,
    excess_states,
    generic_counts_by_capacity,
    gf_of_generic,
    gf_total,
    transition_matrix,
)
from .juggling import (
    MultiplexPattern,
    ball_count,
    complement,
    is_minimal,
    is_valid,
    parse_pattern,
    pattern_text,
    pattern_to_placement,
    placement_to_pattern,
    scale_pattern,
    shift_pattern,
)
from .placements import (
    DropDistribution,
    RookPlacement,
    cell_label,
    count_by_drops,
    drops,
    enumerate_placements,
    min_diagonal_multiplicity,
    symmetry_map,
)

__all__ = [
    "__version__",
    "Polynomial",
    "RationalFunction",
    "PolyMatrix",
    "RationalMatrix",
    "poly_gcd",
    "poly_text",
    "ratfun_equal",
    "geometric_sum",
    "RookPlacement",
    "DropDistribution",
    "cell_label",
    "drops",
    "enumerate_placements",
    "count_by_drops",
    "symmetry_map",
    "min_diagonal_multiplicity",
    "MultiplexPattern",
    "is_valid",
    "is_minimal",
    "ball_count",
    "placement_to_pattern",
    "pattern_to_placement",
    "scale_pattern",
    "shift_pattern",
    "complement",
    "parse_pattern",
    "pattern_text",
    "GenericPlacement",
    "TransitionMatrix",
    "OracleComparison",
    "excess_states",
    "transition_matrix",
    "enumerate_generic",
    "generic_counts_by_capacity",
    "gf_of_generic",
    "gf_total",
    "coefficients_vs_oracle",
]
