"""Finite-model workbench for granular rough set theory.

Rough Y-systems over finite approximation spaces, correspondences between
them, comparison relations, bigness predicates, and pre-rough quotient
algebras with their filter theory and contamination-free partial algebras.
"""

__version__ = "0.1.0"

from granrough.core_space import (
    ApproximationSpace,
    Granulation,
    Relation,
    Subset,
    Universe,
    blocks_containing,
    definite_elements,
    generate_relation,
    granulation_from_relation,
    lower_approx,
    rough_inclusion_k,
    upper_approx,
)
from granrough.rys import Rys, build_classical_rys, build_tolerance_rys, classify_evolution
from granrough.correspondence import Correspondence, classify
from granrough.comparison import related
from granrough.prerough import PreRoughAlgebra, quotient_by_rough_equality
from granrough.claims import run_claim, run_suite

__all__ = [
    "ApproximationSpace",
    "Correspondence",
    "Granulation",
    "PreRoughAlgebra",
    "Relation",
    "Rys",
    "Subset",
    "Universe",
    "blocks_containing",
    "build_classical_rys",
    "build_tolerance_rys",
    "classify",
    "classify_evolution",
    "definite_elements",
    "generate_relation",
    "granulation_from_relation",
    "lower_approx",
    "quotient_by_rough_equality",
    "related",
    "rough_inclusion_k",
    "run_claim",
    "run_suite",
    "upper_approx",
]
