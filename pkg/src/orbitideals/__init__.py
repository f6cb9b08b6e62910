"""Generators and certificates for defining ideals of nilpotent orbit closures."""

from .membership import (
    CONSISTENT_NON_MEMBER,
    MEMBER,
    NON_MEMBER,
    GradedPiece,
    MembershipVerdict,
    MinimalityReport,
    RedundancyReport,
    ideal_contains,
    scheduled_generators,
    verify_minimal,
    verify_redundant,
)
from .minors import (
    family_rank,
    minor,
    minor_sum_basis,
    minor_sum_family,
    prefixed_minor_sum,
    principal_minor_sum,
)
from .orbit import (
    OrbitSample,
    OrbitSampleError,
    RationalMatrix,
    VanishingReport,
    check_vanishing,
    jordan_matrix,
    kernel_dimensions,
    sample_orbit,
)
from .partitions import (
    GeneratorDescriptor,
    Partition,
    Schedule,
    admits_minor_space,
    conjugate,
    critical_size,
    excluded_depths,
    format_partition,
    full_schedule,
    minimal_schedule,
    minor_space_vanishes,
    necessity_witness,
    parse_partition,
    partitions_of,
    rank_variety_schedule,
    redundancy_witness,
)
from .polyring import Polynomial, monomials_of_degree
from .schur import DimensionTable, dimension_table, layer_basis, layer_dimension

__version__ = "0.1.0"

__all__ = [
    "CONSISTENT_NON_MEMBER",
    "MEMBER",
    "NON_MEMBER",
    "GradedPiece",
    "MembershipVerdict",
    "MinimalityReport",
    "RedundancyReport",
    "ideal_contains",
    "scheduled_generators",
    "verify_minimal",
    "verify_redundant",
    "family_rank",
    "minor",
    "minor_sum_basis",
    "minor_sum_family",
    "prefixed_minor_sum",
    "principal_minor_sum",
    "OrbitSample",
    "OrbitSampleError",
    "RationalMatrix",
    "VanishingReport",
    "check_vanishing",
    "jordan_matrix",
    "kernel_dimensions",
    "sample_orbit",
    "GeneratorDescriptor",
    "Partition",
    "Schedule",
    "admits_minor_space",
    "conjugate",
    "critical_size",
    "excluded_depths",
    "format_partition",
    "full_schedule",
    "minimal_schedule",
    "minor_space_vanishes",
    "necessity_witness",
    "parse_partition",
    "partitions_of",
    "rank_variety_schedule",
    "redundancy_witness",
    "Polynomial",
    "monomials_of_degree",
    "DimensionTable",
    "dimension_table",
    "layer_basis",
    "layer_dimension",
    "__version__",
]
