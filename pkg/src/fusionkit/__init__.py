"""Fusion systems of small permutation groups.

Builds F_S(G) for permutation groups, computes the center Z(F) and the
centralizer C_S(E) of the subsystem induced by a subgroup, and checks the
centralizer theorems for normal subgroups on concrete groups.
"""

from .centralizers import c_s_of_subsystem, extends_centralizing, subsystem_centralized_by, z_of_fusion
from .errors import FusionkitError, InconsistencyError, ScaleLimitError
from .fusion import FusionLikeSystem, FusionMorphism, fusion_system, subsystem
from .groups import direct_product, make_named
from .permcore import PermGroup, Permutation, build_group, parse_cycles
from .theorems import (
    VerificationReport,
    check_corollary,
    check_lemma_1,
    check_theorem_a,
    check_theorem_b,
    paper_counterexample,
    proof_trace_theorem_b,
)

__version__ = "0.1.0"

__all__ = [
    "FusionLikeSystem",
    "FusionMorphism",
    "FusionkitError",
    "InconsistencyError",
    "PermGroup",
    "Permutation",
    "ScaleLimitError",
    "VerificationReport",
    "build_group",
    "c_s_of_subsystem",
    "check_corollary",
    "check_lemma_1",
    "check_theorem_a",
    "check_theorem_b",
    "direct_product",
    "extends_centralizing",
    "fusion_system",
    "make_named",
    "paper_counterexample",
    "parse_cycles",
    "proof_trace_theorem_b",
    "subsystem",
    "subsystem_centralized_by",
    "z_of_fusion",
]
