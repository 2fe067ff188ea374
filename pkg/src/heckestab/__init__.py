"""Exact structure constants for the double coset algebra of B_n inside S_2n.

The hyperoctahedral group B_n sits in S_2n as the stabilizer of the
couples {1,2}, {3,4}, ..., {2n-1,2n}.  Its double cosets are indexed by
stable coset types (integer partitions), and the products of their
indicator sums are governed by integer structure constants b that grow
polynomially after normalization.  This package computes those
constants exactly, by several independent routes, and fits the
stability polynomials.
"""

from __future__ import annotations

from .cache import CacheRecord, append_entry, lookup, read_records
from .config import DEFAULT_BUDGET, DEFAULT_SEED, DEFAULT_SHARDS
from .constants import (
    METHODS,
    StabilityFit,
    StructEntry,
    ambient_key,
    b_conv,
    b_factor,
    b_mainlemma,
    b_orbit,
    compute_all,
    fit_stability,
    joint_conv_table,
    joint_factor_table,
    joint_mainlemma_table,
    normalize_b,
    structconst,
)
from .cosets import (
    CosetGraph,
    canonical_rep,
    class_members0,
    conjugacy_class_B,
    coset_graph,
    coset_type,
    enumerate_K,
    k_factor,
    restricted_K,
    restricted_class_size,
    restricted_members0,
    stable_coset_type,
)
from .errors import (
    ConsistencyError,
    DomainError,
    HeckestabError,
    ResourceBudgetError,
)
from .hyperoct import (
    enumerate_B,
    generators_B,
    is_in_B,
    partner,
    random_B,
    t_n,
)
from .orbits import (
    ACTIONS,
    OrbitRecord,
    OrbitResult,
    act,
    count_orbits,
    find_orbits,
    k_constant,
    orbit_of,
    phi,
    predict_orbit_size,
)
from .partitions import Partition
from .perms import Permutation, compose, in_conjugacy_class
from .ratpoly import RationalPolynomial, interpolate
from .supports import (
    CompressResult,
    ShrinkResult,
    StraightenResult,
    SupportProfile,
    completed_support,
    compress,
    magnitude,
    profile,
    shrink,
    straighten,
)
from .verify import SUITES, CheckResult, run_suite, stable_types

__version__ = "0.1.0"

__all__ = [
    "ACTIONS",
    "CacheRecord",
    "CheckResult",
    "CompressResult",
    "ConsistencyError",
    "CosetGraph",
    "DEFAULT_BUDGET",
    "DEFAULT_SEED",
    "DEFAULT_SHARDS",
    "DomainError",
    "HeckestabError",
    "METHODS",
    "OrbitRecord",
    "OrbitResult",
    "Partition",
    "Permutation",
    "RationalPolynomial",
    "ResourceBudgetError",
    "SUITES",
    "ShrinkResult",
    "StabilityFit",
    "StraightenResult",
    "StructEntry",
    "SupportProfile",
    "__version__",
    "act",
    "ambient_key",
    "append_entry",
    "b_conv",
    "b_factor",
    "b_mainlemma",
    "b_orbit",
    "canonical_rep",
    "class_members0",
    "completed_support",
    "compose",
    "compress",
    "compute_all",
    "conjugacy_class_B",
    "coset_graph",
    "coset_type",
    "count_orbits",
    "enumerate_B",
    "enumerate_K",
    "find_orbits",
    "fit_stability",
    "generators_B",
    "in_conjugacy_class",
    "interpolate",
    "is_in_B",
    "joint_conv_table",
    "joint_factor_table",
    "joint_mainlemma_table",
    "k_constant",
    "k_factor",
    "lookup",
    "magnitude",
    "normalize_b",
    "orbit_of",
    "partner",
    "phi",
    "predict_orbit_size",
    "profile",
    "random_B",
    "read_records",
    "restricted_K",
    "restricted_class_size",
    "restricted_members0",
    "run_suite",
    "shrink",
    "stable_coset_type",
    "stable_types",
    "straighten",
    "structconst",
    "t_n",
]
