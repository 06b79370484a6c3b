"""Minimum-cardinality generators of finitely generated convex cones, in
exact rational arithmetic."""
from .conecore import (
    ConeDecomposition,
    GeneratorSet,
    MembershipCertificate,
    certify_membership,
    cone_equal,
    decompose,
    is_pointed,
    lineal_part,
    member,
    minimize,
    reduce_ci,
)
from .lpfeas import Feasible, FeasibilitySystem, Infeasible, solve_feasibility, verify_certificate

__all__ = [
    "ConeDecomposition",
    "Feasible",
    "FeasibilitySystem",
    "GeneratorSet",
    "Infeasible",
    "MembershipCertificate",
    "certify_membership",
    "cone_equal",
    "decompose",
    "is_pointed",
    "lineal_part",
    "member",
    "minimize",
    "reduce_ci",
    "solve_feasibility",
    "verify_certificate",
]
