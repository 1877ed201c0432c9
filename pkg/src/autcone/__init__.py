"""Exact computation of infinitesimal automorphisms of projective cones.

Varieties are given by parametrizations of their affine cones (or by
equations), their ideals are computed degree by degree, and the Lie algebra
aut(S^) together with its prolongations is obtained from exact rational
linear algebra.
"""
from autcone.geometry import cone_vertex_space, hyperplane_section, project, section_inequality_check
from autcone.ideal import GradedPiece, degree_bound, degree_piece_from_generators, forms_vanishing, is_nondegenerate
from autcone.lie import LinearLieAlgebra, ProlongationSpace, aut_cone, bracket, projective_dim, prolongation
from autcone.linalg import MatrixQ, intersect_subspaces, kernel_basis, membership, rref
from autcone.poly import MonomialBasis, Polynomial, derivation_apply
from autcone.varieties import Parametrization, cone_over, pluecker, quadric, segre, spinor10, sympl_vmrt, veronese

__version__ = "0.1.0"

__all__ = [
    "GradedPiece",
    "LinearLieAlgebra",
    "MatrixQ",
    "MonomialBasis",
    "Parametrization",
    "Polynomial",
    "ProlongationSpace",
    "aut_cone",
    "bracket",
    "cone_over",
    "cone_vertex_space",
    "degree_bound",
    "degree_piece_from_generators",
    "derivation_apply",
    "forms_vanishing",
    "hyperplane_section",
    "intersect_subspaces",
    "is_nondegenerate",
    "kernel_basis",
    "membership",
    "pluecker",
    "project",
    "projective_dim",
    "prolongation",
    "quadric",
    "rref",
    "section_inequality_check",
    "segre",
    "spinor10",
    "sympl_vmrt",
    "veronese",
]
