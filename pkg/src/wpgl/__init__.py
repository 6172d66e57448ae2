"""Exact computations with weighted projective general linear 2-groups,
finite crossed modules and butterflies."""

from .fields import GF, QQ, FpElement, PrimeField, RationalField
from .signature import WeightSignature
from .poly import GradedPolynomial, enumerate_monomials, substitute, weighted_degree
from .automorphism import (
    BlockLinear,
    EquivariantMap,
    Unipotent,
    compose,
    conj,
    decompose,
    invert,
    is_automorphism,
    linear_part,
    scalar,
    unipotent_factorize,
    validate,
)
from .counting import count_d, count_k, global_section_count
from .structure import Pi0Report, pi0_report, pi1_order, splitting_matrix
from .groups import FiniteGroup, GroupHom, cyclic_group, symmetric_group
from .xmod import CentralExtension, CrossedModule, RightAction, ValidationReport, check_crossed_module
from .butterfly import Butterfly, check_butterfly, from_strict_morphism, quotient_invariants

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "FpElement", "PrimeField", "RationalField", "WeightSignature",
    "GradedPolynomial", "enumerate_monomials", "substitute", "weighted_degree",
    "BlockLinear", "EquivariantMap", "Unipotent", "compose", "conj", "decompose",
    "invert", "is_automorphism", "linear_part", "scalar", "unipotent_factorize",
    "validate", "count_d", "count_k", "global_section_count", "Pi0Report",
    "pi0_report", "pi1_order", "splitting_matrix", "FiniteGroup", "GroupHom",
    "cyclic_group", "symmetric_group", "CentralExtension", "CrossedModule",
    "RightAction", "ValidationReport", "check_crossed_module", "Butterfly",
    "check_butterfly", "from_strict_morphism", "quotient_invariants",
]
