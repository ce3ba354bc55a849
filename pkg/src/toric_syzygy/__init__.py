"""Exact syzygies, Bass numbers and local cohomology of multigraded modules
given by lattices of subspaces, with applications to hyperplane arrangements
and to equivariant modules over simplicial toric varieties."""
from .errors import InvariantViolation, PreconditionError, SchemaError, SyzygyError
from .exactla import GF, QQ, Matrix, Subspace
from .lattice import FinitePoset, generate_gcd_lattice, generate_lcm_lattice
from .gradedmod import (FiltrationData, GradedModule, betti_table, free_resolution, from_box,
                        from_filtrations, from_monomial_ideal, matlis_dual, verify_exactness)
from .duality import bass_from_gcd_lattice, bass_table, injective_resolution
from .localcohom import point_local_cohom_table, support_local_cohomology, SupportFamily
from .arrangement import Arrangement, intersection_lattice, predicted_betti, predicted_local_cohom
from .toricmcm import (SimplicialCone, class_group, enumerate_cuboid_classes,
                       enumerate_singleton_classes, full_verify, mcm_check)

__version__ = "0.1.0"

__all__ = [
    "InvariantViolation",
    "PreconditionError",
    "SchemaError",
    "SyzygyError",
    "GF",
    "QQ",
    "Matrix",
    "Subspace",
    "FinitePoset",
    "generate_gcd_lattice",
    "generate_lcm_lattice",
    "FiltrationData",
    "GradedModule",
    "betti_table",
    "free_resolution",
    "from_box",
    "from_filtrations",
    "from_monomial_ideal",
    "matlis_dual",
    "verify_exactness",
    "bass_from_gcd_lattice",
    "bass_table",
    "injective_resolution",
    "point_local_cohom_table",
    "support_local_cohomology",
    "SupportFamily",
    "Arrangement",
    "intersection_lattice",
    "predicted_betti",
    "predicted_local_cohom",
    "SimplicialCone",
    "class_group",
    "enumerate_cuboid_classes",
    "enumerate_singleton_classes",
    "full_verify",
    "mcm_check",
]
