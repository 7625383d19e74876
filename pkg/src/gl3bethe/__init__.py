"""Bethe vectors of GL(3)-invariant integrable models, built and checked in
exact rational arithmetic on an inhomogeneous spin chain."""
from .actions import ActionSpec, action_rhs, check_action, eigenvalue, transfer_action_offshell
from .bethe import BetheVector, build, build_explicit, build_recursive, build_trace, renormalize
from .chain import MonodromyChain, SparseOperator, SparseState, r_matrix
from .errors import (
    CardinalityError,
    DegenerateRoots,
    DegenerateWeightError,
    DuplicateError,
    GenericityError,
    Gl3BetheError,
    NoConvergence,
    PoleError,
    ResourceError,
    SignatureError,
)
from .identities import check_allequal_remark, check_G_identity, check_ik_identities
from .onshell import BetheRoots, check_onshell, solve_bethe
from .partitions import enumerate_partitions, split
from .relations import check_exchange_relations, check_rtt, check_yang_baxter
from .report import Case, Report
from .scalars import f, g, h, ik_determinant, prod_over_sets, t
from .suites import SuiteConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "ActionSpec", "BetheRoots", "BetheVector", "Case", "CardinalityError", "DegenerateRoots",
    "DegenerateWeightError", "DuplicateError", "GenericityError", "Gl3BetheError", "MonodromyChain",
    "NoConvergence", "PoleError", "Report", "ResourceError", "SignatureError", "SparseOperator",
    "SparseState", "SuiteConfig", "action_rhs", "build", "build_explicit", "build_recursive",
    "build_trace", "check_G_identity", "check_action", "check_allequal_remark", "check_exchange_relations",
    "check_ik_identities", "check_onshell", "check_rtt", "check_yang_baxter", "eigenvalue",
    "enumerate_partitions", "f", "g", "h", "ik_determinant", "prod_over_sets", "r_matrix", "renormalize",
    "run_suite", "solve_bethe", "split", "t", "transfer_action_offshell",
]
